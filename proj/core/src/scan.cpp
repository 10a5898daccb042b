#include "cuspforms/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <vector>

#include "cuspforms/cuspform.hpp"

namespace cuspforms {

namespace {

// Applies `visit` to consecutive slices of the prime list, mimicking an
// arbitrary block partition of [2, bound].
template <typename Visit>
void over_blocks(const std::vector<std::uint64_t>& primes, std::uint64_t block_size,
                 Visit&& visit) {
  if (block_size == 0) block_size = primes.size() + 1;
  for (std::size_t begin = 0; begin < primes.size(); begin += block_size) {
    std::size_t end = std::min(primes.size(), begin + block_size);
    for (std::size_t i = begin; i < end; ++i) visit(primes[i]);
  }
}

Int mod(const Int& value, const Int& modulus) {
  Int out;
  mpz_mod(out.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

std::string format_double6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string exact_ratio(std::uint64_t num, std::uint64_t den) {
  Rat ratio(num, den);
  ratio.canonicalize();
  return ratio.get_str();
}

}  // namespace

ScanReport lehmer_scan(unsigned weight, std::uint64_t limit, std::uint64_t block_size) {
  if (limit < 1) throw std::invalid_argument("limit must be at least 1");
  Stopwatch watch;
  auto table = tau_table_at_least(weight, std::max<std::uint64_t>(limit, 2));
  auto primes = primes_up_to(limit);

  ScanReport report;
  report.kind = "lehmer-scan";
  report.parameters["weight"] = std::to_string(weight);
  report.parameters["limit"] = std::to_string(limit);

  std::uint64_t scanned = 0;
  over_blocks(primes, block_size, [&](std::uint64_t p) {
    ++scanned;
    if (table->tau(p) == 0)
      report.witnesses.push_back({{"p", std::to_string(p)}});
  });
  report.counters["primes-scanned"] = scanned;
  report.counters["witnesses"] = report.witnesses.size();
  finalize_digest(report);
  report.wall_seconds = watch.seconds();
  return report;
}

ScanReport residue_density(unsigned weight, std::uint64_t q, std::uint64_t a, std::uint64_t x,
                           std::uint64_t block_size) {
  if (!is_prime(Int(q))) throw std::invalid_argument("modulus must be prime");
  if (a >= q) throw std::invalid_argument("residue must lie below the modulus");
  if (x < 1) throw std::invalid_argument("bound must be at least 1");
  Stopwatch watch;
  auto table = tau_table_at_least(weight, std::max<std::uint64_t>(x, 2));
  auto primes = primes_up_to(x);

  ScanReport report;
  report.kind = "residue-density";
  report.parameters["weight"] = std::to_string(weight);
  report.parameters["q"] = std::to_string(q);
  report.parameters["a"] = std::to_string(a);
  report.parameters["x"] = std::to_string(x);

  Int modulus(static_cast<unsigned long>(q));
  Int residue(static_cast<unsigned long>(a));
  std::uint64_t hits = 0;
  over_blocks(primes, block_size, [&](std::uint64_t p) {
    if (mod(table->tau(p), modulus) == residue) ++hits;
  });
  report.counters["hits"] = hits;
  report.counters["primes"] = primes.size();
  if (!primes.empty()) {
    report.annotations["ratio-exact"] = exact_ratio(hits, primes.size());
    report.annotations["ratio"] = decimal6(Rat(hits, primes.size()));
  }
  finalize_digest(report);
  report.wall_seconds = watch.seconds();
  return report;
}

ScanReport sign_stats(unsigned weight, std::uint64_t q, std::uint64_t a, std::uint64_t x,
                      std::uint64_t block_size) {
  if (q < 1) throw std::invalid_argument("modulus must be positive");
  if (q > 1 && std::gcd(q, a) != 1)
    throw std::invalid_argument("residue must be coprime to the modulus");
  if (q > 1 && a >= q) throw std::invalid_argument("residue must lie below the modulus");
  if (x < 1) throw std::invalid_argument("bound must be at least 1");
  Stopwatch watch;
  auto table = tau_table_at_least(weight, std::max<std::uint64_t>(x, 2));
  auto primes = primes_up_to(x);

  ScanReport report;
  report.kind = "sign-stats";
  report.parameters["weight"] = std::to_string(weight);
  report.parameters["q"] = std::to_string(q);
  report.parameters["a"] = std::to_string(a);
  report.parameters["x"] = std::to_string(x);

  std::uint64_t positive = 0, negative = 0, zero = 0, in_class = 0;
  over_blocks(primes, block_size, [&](std::uint64_t p) {
    if (q > 1 && p % q != a) return;
    ++in_class;
    int sign = sgn(table->tau(p));
    if (sign > 0)
      ++positive;
    else if (sign < 0)
      ++negative;
    else
      ++zero;
  });
  report.counters["positive"] = positive;
  report.counters["negative"] = negative;
  report.counters["zero"] = zero;
  report.counters["primes-in-class"] = in_class;
  report.counters["primes"] = primes.size();

  Int phi = totient(Int(static_cast<unsigned long>(q)));
  Rat expected(Int(primes.size()), 2 * phi);
  expected.canonicalize();
  report.annotations["expected-count-exact"] = expected.get_str();
  report.annotations["expected-count"] = decimal6(expected);
  if (!primes.empty()) {
    Rat scale = Rat(2 * phi, Int(primes.size()));
    scale.canonicalize();
    report.annotations["ratio-positive"] = decimal6(Rat(positive) * scale);
    report.annotations["ratio-negative"] = decimal6(Rat(negative) * scale);
  }
  finalize_digest(report);
  report.wall_seconds = watch.seconds();
  return report;
}

ScanReport value_set_count(unsigned weight, std::uint64_t x, std::uint64_t block_size) {
  if (x < 1) throw std::invalid_argument("bound must be at least 1");
  (void)block_size;  // value collection has no block structure to vary
  Stopwatch watch;
  auto table = tau_table_at_least(weight, std::max<std::uint64_t>(x, 2));

  ScanReport report;
  report.kind = "value-set-count";
  report.parameters["weight"] = std::to_string(weight);
  report.parameters["x"] = std::to_string(x);

  std::vector<const Int*> values;
  values.reserve(x);
  for (std::uint64_t n = 1; n <= x; ++n) values.push_back(&table->tau(n));
  std::sort(values.begin(), values.end(),
            [](const Int* lhs, const Int* rhs) { return *lhs < *rhs; });
  std::uint64_t distinct = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i == 0 || *values[i] != *values[i - 1]) ++distinct;

  report.counters["checked"] = x;
  report.counters["distinct-values"] = distinct;
  if (x >= 16) {
    double xd = static_cast<double>(x);
    double bound = std::sqrt(xd) * std::exp(-4.0 * std::log(xd) / std::log(std::log(xd)));
    report.annotations["value-bound"] = format_double6(bound);
  }
  finalize_digest(report);
  report.wall_seconds = watch.seconds();
  return report;
}

ScanReport nonordinary_scan(unsigned weight, std::uint64_t limit, std::uint64_t block_size) {
  if (limit < 1) throw std::invalid_argument("limit must be at least 1");
  Stopwatch watch;
  auto table = tau_table_at_least(weight, std::max<std::uint64_t>(limit, 2));
  auto primes = primes_up_to(limit);

  ScanReport report;
  report.kind = "nonordinary-scan";
  report.parameters["weight"] = std::to_string(weight);
  report.parameters["limit"] = std::to_string(limit);

  std::uint64_t scanned = 0;
  over_blocks(primes, block_size, [&](std::uint64_t p) {
    ++scanned;
    if (mod(table->tau(p), Int(static_cast<unsigned long>(p))) == 0)
      report.witnesses.push_back(
          {{"p", std::to_string(p)}, {"tau", table->tau(p).get_str()}});
  });
  report.counters["primes-scanned"] = scanned;
  report.counters["witnesses"] = report.witnesses.size();
  finalize_digest(report);
  report.wall_seconds = watch.seconds();
  return report;
}

}  // namespace cuspforms
