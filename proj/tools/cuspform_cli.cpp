#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "cuspforms/cache.hpp"
#include "cuspforms/cuspform.hpp"
#include "cuspforms/dioph.hpp"
#include "cuspforms/qseries.hpp"
#include "cuspforms/report.hpp"
#include "cuspforms/scan.hpp"

namespace {

using cuspforms::Int;
using cuspforms::ScanReport;

struct ExpandOptions {
  std::string kind;
  std::uint64_t terms = 8;
  unsigned r = 24;
  unsigned w = 4;
  std::string factors;
  std::string out;
};

struct TauOptions {
  unsigned weight = 12;
  std::uint64_t n = 0;
  std::string range;
  std::string cache_dir;
  bool has_n = false;
};

struct VerifyOptions {
  std::string suite;
  unsigned weight = 12;
  std::uint64_t limit = 1000;
};

struct ScanOptions {
  std::string kind;
  unsigned weight = 12;
  std::uint64_t limit = 1000;
  std::uint64_t q = 1;
  std::uint64_t a = 0;
  bool expect_empty = false;
};

struct DiophOptions {
  std::string action;
  std::string t;
  std::string x_bound = "1000";
  std::string x;
  std::string y;
  unsigned weight = 12;
  std::uint64_t p = 2;
};

cuspforms::EtaProductSpec parse_factor_list(const std::string& text) {
  cuspforms::EtaProductSpec spec;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(start, comma - start);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("factor list items must look like d:r");
    unsigned long d = std::stoul(item.substr(0, colon));
    long r = std::stol(item.substr(colon + 1));
    spec.factors.emplace_back(static_cast<unsigned>(d), static_cast<int>(r));
    start = comma + 1;
  }
  if (spec.factors.empty()) throw std::invalid_argument("factor list is empty");
  return spec;
}

int run_expand(const ExpandOptions& opts) {
  if (opts.terms < 1) throw std::invalid_argument("need at least one term");
  const auto order = static_cast<std::size_t>(opts.terms);

  cuspforms::CoefficientCacheFile file;
  file.order = opts.terms;
  if (opts.kind == "eta") {
    auto series = cuspforms::eta_series(order);
    file.weight_token = "1/2";
    for (std::size_t n = 1; n <= order; ++n) file.values.push_back(series.coeff[n]);
  } else if (opts.kind == "jacobi") {
    auto series = cuspforms::jacobi_cube_series(order);
    file.weight_token = "3/2";
    for (std::size_t n = 1; n <= order; ++n) file.values.push_back(series.coeff[n]);
  } else if (opts.kind == "eta-power") {
    if (opts.r < 1) throw std::invalid_argument("exponent must be positive");
    auto series = cuspforms::eta_power_series(opts.r, order);
    cuspforms::Rat token(opts.r, 2U);
    token.canonicalize();
    file.weight_token = token.get_str();
    for (std::size_t n = 1; n <= order; ++n) file.values.push_back(series.coeff[n]);
  } else if (opts.kind == "eisenstein") {
    auto series = cuspforms::eisenstein_series_int(opts.w, order);
    file.weight_token = std::to_string(opts.w);
    for (std::size_t n = 1; n <= order; ++n) file.values.push_back(series.coeff[n]);
  } else if (opts.kind == "eta-product") {
    auto spec = parse_factor_list(opts.factors);
    auto series = cuspforms::eta_product_series(spec, order);
    file.weight_token = spec.weight().get_str();
    for (std::size_t n = 1; n <= order; ++n) file.values.push_back(series.coeff[n]);
  } else {
    throw std::invalid_argument("unknown expansion kind " + opts.kind);
  }

  std::filesystem::path out_path(opts.out);
  if (out_path.has_parent_path()) std::filesystem::create_directories(out_path.parent_path());
  cuspforms::write_cache_file(out_path, file);
  std::cout << out_path.string() << ": " << file.order << " rows, weight "
            << file.weight_token << "\n";
  return 0;
}

cuspforms::CoefficientCacheFile ensure_tau_cache(unsigned weight, std::uint64_t needed,
                                                 const std::string& cache_dir_flag) {
  auto dir = cuspforms::resolve_cache_dir(cache_dir_flag);
  auto path = dir / ("tau_w" + std::to_string(weight) + ".csv");

  if (std::filesystem::exists(path)) {
    auto file = cuspforms::read_cache_file(path);
    if (file.weight_token != std::to_string(weight))
      throw std::runtime_error("cache file " + path.string() + " belongs to weight " +
                               file.weight_token);
    if (file.order >= needed) return file;
  }

  auto table = cuspforms::tau_table(weight, needed);
  cuspforms::CoefficientCacheFile file;
  file.weight_token = std::to_string(weight);
  file.order = needed;
  file.values = table.coeff;
  std::filesystem::create_directories(dir);
  cuspforms::write_cache_file(path, file);
  return file;
}

int run_tau(const TauOptions& opts) {
  if (!cuspforms::is_supported_weight(opts.weight))
    throw std::invalid_argument("unsupported weight " + std::to_string(opts.weight));

  std::uint64_t lo = 0, hi = 0;
  if (opts.has_n) {
    if (opts.n < 1) throw std::invalid_argument("index must be positive");
    lo = hi = opts.n;
  } else if (!opts.range.empty()) {
    std::size_t colon = opts.range.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("range must look like lo:hi");
    lo = std::stoull(opts.range.substr(0, colon));
    hi = std::stoull(opts.range.substr(colon + 1));
    if (lo < 1 || hi < lo) throw std::invalid_argument("range must satisfy 1 <= lo <= hi");
  } else {
    throw std::invalid_argument("provide --n or --range");
  }

  auto file = ensure_tau_cache(opts.weight, hi, opts.cache_dir);
  if (opts.has_n) {
    std::cout << file.values[lo - 1].get_str() << "\n";
  } else {
    for (std::uint64_t n = lo; n <= hi; ++n)
      std::cout << n << "," << file.values[n - 1].get_str() << "\n";
  }
  return 0;
}

int run_verify(const VerifyOptions& opts) {
  ScanReport report;
  if (opts.suite == "congruence") {
    report = cuspforms::congruence_check(opts.weight, opts.limit);
  } else if (opts.suite == "odd-square") {
    report = cuspforms::odd_square_check(opts.weight, opts.limit);
  } else if (opts.suite == "hecke") {
    cuspforms::Stopwatch watch;
    report.kind = "hecke";
    report.parameters["weight"] = std::to_string(opts.weight);
    report.parameters["limit"] = std::to_string(opts.limit);
    cuspforms::tau_table_at_least(opts.weight, opts.limit * opts.limit);
    std::uint64_t checked = 0, violations = 0;
    for (std::uint64_t m = 1; m <= opts.limit; ++m)
      for (std::uint64_t n = 1; n <= opts.limit; ++n) {
        ++checked;
        if (!cuspforms::hecke_check(opts.weight, m, n)) {
          ++violations;
          if (report.witnesses.size() < 16)
            report.witnesses.push_back(
                {{"m", std::to_string(m)}, {"n", std::to_string(n)}});
        }
      }
    report.counters["checked"] = checked;
    report.counters["violations"] = violations;
    cuspforms::finalize_digest(report);
    report.wall_seconds = watch.seconds();
  } else if (opts.suite == "deligne") {
    cuspforms::Stopwatch watch;
    report.kind = "deligne";
    report.parameters["weight"] = std::to_string(opts.weight);
    report.parameters["limit"] = std::to_string(opts.limit);
    auto table = cuspforms::tau_table_at_least(opts.weight, opts.limit);
    std::uint64_t checked = 0, violations = 0;
    for (std::uint64_t p : cuspforms::primes_up_to(opts.limit)) {
      ++checked;
      if (!cuspforms::deligne_check(opts.weight, p)) {
        ++violations;
        if (report.witnesses.size() < 16)
          report.witnesses.push_back(
              {{"p", std::to_string(p)}, {"tau", table->tau(p).get_str()}});
      }
    }
    report.counters["checked"] = checked;
    report.counters["violations"] = violations;
    cuspforms::finalize_digest(report);
    report.wall_seconds = watch.seconds();
  } else {
    throw std::invalid_argument("unknown suite " + opts.suite);
  }

  std::cout << cuspforms::render_json(report);
  return report.counters.at("violations") == 0 ? 0 : 1;
}

int run_scan(const ScanOptions& opts) {
  ScanReport report;
  if (opts.kind == "lehmer") {
    report = cuspforms::lehmer_scan(opts.weight, opts.limit);
  } else if (opts.kind == "residue") {
    report = cuspforms::residue_density(opts.weight, opts.q, opts.a, opts.limit);
  } else if (opts.kind == "signs") {
    report = cuspforms::sign_stats(opts.weight, opts.q, opts.a, opts.limit);
  } else if (opts.kind == "values") {
    report = cuspforms::value_set_count(opts.weight, opts.limit);
  } else if (opts.kind == "nonordinary") {
    report = cuspforms::nonordinary_scan(opts.weight, opts.limit);
  } else {
    throw std::invalid_argument("unknown scan kind " + opts.kind);
  }

  std::cout << cuspforms::render_json(report);
  if (opts.expect_empty && !report.witnesses.empty()) return 1;
  return 0;
}

int run_dioph(const DiophOptions& opts) {
  if (opts.action == "derive") {
    if (opts.t.empty()) throw std::invalid_argument("derive needs --t");
    std::cout << cuspforms::render_json(cuspforms::derive_report(Int(opts.t)));
    return 0;
  }
  if (opts.action == "points") {
    if (opts.t.empty()) throw std::invalid_argument("points needs --t");
    std::cout << cuspforms::render_json(
        cuspforms::points_report(Int(opts.t), Int(opts.x_bound)));
    return 0;
  }
  if (opts.action == "backsub") {
    if (opts.t.empty() || opts.x.empty() || opts.y.empty())
      throw std::invalid_argument("backsub needs --t, --x, and --y");
    Int t(opts.t), x(opts.x), y(opts.y);
    auto record = cuspforms::back_substitute_unchecked(t, x, y);
    std::cout << cuspforms::render_json(cuspforms::backsub_report(t, x, y));
    return record.on_curve ? 0 : 1;
  }
  if (opts.action == "witness") {
    std::cout << cuspforms::render_json(cuspforms::witness_report(opts.weight, opts.p));
    return 0;
  }
  throw std::invalid_argument("unknown action " + opts.action);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cusp form coefficients, identity scans, and curve derivations"};
  app.require_subcommand(1);

  ExpandOptions expand_opts;
  auto* expand = app.add_subcommand("expand", "write a q-expansion as a coefficient file");
  expand->add_option("kind", expand_opts.kind, "eta|eta-power|eta-product|eisenstein|jacobi")
      ->required()
      ->check(CLI::IsMember({"eta", "eta-power", "eta-product", "eisenstein", "jacobi"}));
  expand->add_option("--terms", expand_opts.terms, "number of rows to write");
  expand->add_option("--r", expand_opts.r, "eta-power exponent");
  expand->add_option("--w", expand_opts.w, "Eisenstein weight");
  expand->add_option("--factors", expand_opts.factors, "eta-product factors d:r,d:r,...");
  expand->add_option("--out", expand_opts.out, "output path")->required();

  TauOptions tau_opts;
  auto* tau = app.add_subcommand("tau", "print exact coefficients, using the cache");
  tau->add_option("--weight", tau_opts.weight, "supported weight");
  auto* n_opt = tau->add_option("--n", tau_opts.n, "single index");
  tau->add_option("--range", tau_opts.range, "inclusive range lo:hi")->excludes(n_opt);
  tau->add_option("--cache-dir", tau_opts.cache_dir, "cache directory");

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run an identity suite and print its report");
  verify->add_option("suite", verify_opts.suite, "congruence|hecke|deligne|odd-square")
      ->required()
      ->check(CLI::IsMember({"congruence", "hecke", "deligne", "odd-square"}));
  verify->add_option("--weight", verify_opts.weight, "supported weight");
  verify->add_option("--limit", verify_opts.limit, "index bound");

  ScanOptions scan_opts;
  auto* scan = app.add_subcommand("scan", "run a prime scan and print its report");
  scan->add_option("kind", scan_opts.kind, "lehmer|residue|signs|values|nonordinary")
      ->required()
      ->check(CLI::IsMember({"lehmer", "residue", "signs", "values", "nonordinary"}));
  scan->add_option("--weight", scan_opts.weight, "supported weight");
  scan->add_option("--limit", scan_opts.limit, "bound");
  scan->add_option("--q", scan_opts.q, "modulus (1 means all primes)");
  scan->add_option("--a", scan_opts.a, "residue class");
  scan->add_flag("--expect-empty", scan_opts.expect_empty,
                 "exit nonzero when witnesses are found");

  DiophOptions dioph_opts;
  auto* dioph = app.add_subcommand("dioph", "derive curves, list points, back-substitute");
  dioph->add_option("action", dioph_opts.action, "derive|points|backsub|witness")
      ->required()
      ->check(CLI::IsMember({"derive", "points", "backsub", "witness"}));
  dioph->add_option("--t", dioph_opts.t, "specialization parameter");
  dioph->add_option("--x-bound", dioph_opts.x_bound, "point search bound");
  dioph->add_option("--x", dioph_opts.x, "point x coordinate");
  dioph->add_option("--y", dioph_opts.y, "point y coordinate");
  dioph->add_option("--weight", dioph_opts.weight, "supported weight");
  dioph->add_option("--p", dioph_opts.p, "prime");

  std::string roundtrip_path;
  auto* roundtrip = app.add_subcommand("cache-roundtrip",
                                       "check a coefficient file round-trips byte-identically");
  roundtrip->add_option("path", roundtrip_path, "coefficient file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    tau_opts.has_n = n_opt->count() > 0;
    if (expand->parsed()) return run_expand(expand_opts);
    if (tau->parsed()) return run_tau(tau_opts);
    if (verify->parsed()) return run_verify(verify_opts);
    if (scan->parsed()) return run_scan(scan_opts);
    if (dioph->parsed()) return run_dioph(dioph_opts);
    if (roundtrip->parsed()) {
      cuspforms::cache_roundtrip(roundtrip_path);
      std::cout << "roundtrip ok\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
