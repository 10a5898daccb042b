#include "cuspforms/cuspform.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "cuspforms/qseries.hpp"

namespace cuspforms {

bool is_supported_weight(unsigned weight) {
  return std::find(supported_weights.begin(), supported_weights.end(), weight) !=
         supported_weights.end();
}

Int congruence_modulus(unsigned weight) {
  switch (weight) {
    case 12: return 691;
    case 16: return 3617;
    case 18: return 43867;
    case 20: return 617;
    case 22: return 593;
    case 26: return 657931;
    default: throw std::invalid_argument("unsupported weight: " + std::to_string(weight));
  }
}

CuspFormId cusp_form_id(unsigned weight) {
  CuspFormId id;
  id.weight = weight;
  id.modulus = congruence_modulus(weight);
  id.sigma_exponent = weight - 1;
  if (weight > 12) id.eisenstein_factor_weight = weight - 12;
  return id;
}

const Int& CuspFormTable::tau(std::uint64_t n) const {
  if (n < 1 || n > order) throw std::out_of_range("coefficient index out of range");
  return coeff[n - 1];
}

CuspFormTable build_tau_table(unsigned weight, std::uint64_t order) {
  if (order < 1) throw std::invalid_argument("table order must be at least 1");
  CuspFormTable table;
  table.id = cusp_form_id(weight);
  table.order = order;

  auto discriminant = eta_power_series(24, order - 1);
  if (weight == 12) {
    table.provenance = TableProvenance::direct_eta_power;
    table.coeff.assign(discriminant.coeff.begin(), discriminant.coeff.end());
    return table;
  }

  table.provenance = TableProvenance::eisenstein_convolution;
  QSeries shifted(order);
  for (std::uint64_t n = 1; n <= order; ++n) shifted.coeff[n] = discriminant.coeff[n - 1];
  auto eisenstein = eisenstein_series_int(weight - 12, order);
  auto product = series_mul(shifted, eisenstein, order);
  table.coeff.assign(product.coeff.begin() + 1, product.coeff.end());
  return table;
}

namespace {

std::mutex table_mutex;
std::unordered_map<unsigned, std::shared_ptr<const CuspFormTable>> table_registry;

Int mod(const Int& value, const Int& modulus) {
  Int out;
  mpz_mod(out.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

}  // namespace

std::shared_ptr<const CuspFormTable> tau_table_at_least(unsigned weight, std::uint64_t order) {
  if (!is_supported_weight(weight))
    throw std::invalid_argument("unsupported weight: " + std::to_string(weight));
  std::lock_guard lock(table_mutex);
  auto& slot = table_registry[weight];
  if (slot && slot->order >= order) return slot;
  std::uint64_t target = std::max<std::uint64_t>(
      {order, slot ? 2 * slot->order : 0, std::uint64_t{64}});
  slot = std::make_shared<const CuspFormTable>(build_tau_table(weight, target));
  return slot;
}

CuspFormTable tau_table(unsigned weight, std::uint64_t order) {
  auto shared = tau_table_at_least(weight, order);
  if (shared->order == order) return *shared;
  CuspFormTable table;
  table.id = shared->id;
  table.order = order;
  table.provenance = shared->provenance;
  table.coeff.assign(shared->coeff.begin(), shared->coeff.begin() + order);
  return table;
}

bool hecke_check(unsigned weight, std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("hecke_check requires positive arguments");
  auto table = tau_table_at_least(weight, m * n);
  Int lhs = 0;
  std::uint64_t g = std::gcd(m, n);
  for (std::uint64_t d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    lhs += pow_int(Int(d), weight - 1) * table->tau(m * n / (d * d));
  }
  return lhs == table->tau(m) * table->tau(n);
}

Int tau_prime_power(unsigned weight, std::uint64_t p, unsigned e) {
  if (!is_prime(Int(p))) throw std::invalid_argument("tau_prime_power requires a prime base");
  if (e < 1) throw std::invalid_argument("tau_prime_power requires a positive exponent");
  auto table = tau_table_at_least(weight, p);
  Int t = table->tau(p);
  Int scale = pow_int(Int(p), weight - 1);
  Int prev = 1, current = t;
  for (unsigned i = 1; i < e; ++i) {
    Int next = t * current - scale * prev;
    prev = current;
    current = next;
  }
  return current;
}

bool deligne_check(unsigned weight, std::uint64_t p) {
  if (!is_prime(Int(p))) throw std::invalid_argument("deligne_check requires a prime");
  auto table = tau_table_at_least(weight, p);
  Int t = table->tau(p);
  return t * t <= 4 * pow_int(Int(p), weight - 1);
}

ScanReport congruence_check(unsigned weight, std::uint64_t limit) {
  if (limit < 1) throw std::invalid_argument("limit must be at least 1");
  Stopwatch watch;
  auto table = tau_table_at_least(weight, limit);
  Int modulus = congruence_modulus(weight);

  ScanReport report;
  report.kind = "congruence";
  report.parameters["weight"] = std::to_string(weight);
  report.parameters["limit"] = std::to_string(limit);
  report.annotations["congruence-modulus"] = modulus.get_str();

  auto sigma_values = sigma_table(weight - 1, limit);
  std::uint64_t sigma_violations = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    Int lhs = mod(table->tau(n), modulus);
    Int rhs = mod(sigma_values[n], modulus);
    if (lhs != rhs) {
      ++sigma_violations;
      report.witnesses.push_back({{"suite", "sigma"},
                                  {"n", std::to_string(n)},
                                  {"lhs", lhs.get_str()},
                                  {"rhs", rhs.get_str()}});
    }
  }
  report.counters["checked-sigma"] = limit;
  report.counters["violations-sigma"] = sigma_violations;

  std::uint64_t total_violations = sigma_violations;
  if (weight == 12) {
    auto sigma3 = sigma_table(3, limit);
    std::uint64_t mod7_checked = 0, mod7_violations = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
      if (n % 7 == 0) continue;
      ++mod7_checked;
      Int lhs = mod(table->tau(n), Int(7));
      Int rhs = mod(Int(n) * sigma3[n], Int(7));
      if (lhs != rhs) {
        ++mod7_violations;
        report.witnesses.push_back({{"suite", "mod-7"},
                                    {"n", std::to_string(n)},
                                    {"lhs", lhs.get_str()},
                                    {"rhs", rhs.get_str()}});
      }
    }
    report.counters["checked-mod7"] = mod7_checked;
    report.counters["violations-mod7"] = mod7_violations;
    total_violations += mod7_violations;

    std::uint64_t pp_checked = 0, pp_violations = 0;
    for (std::uint64_t p : primes_up_to(limit)) {
      Int tau_p = table->tau(p);
      Int prime(p);
      unsigned e = 1;
      for (Int power = prime; power <= limit; power *= prime, ++e) {
        ++pp_checked;
        Int lhs = mod(table->tau(power.get_ui()), prime);
        Int rhs = mod(pow_int(tau_p, e), prime);
        if (lhs != rhs) {
          ++pp_violations;
          report.witnesses.push_back({{"suite", "prime-power"},
                                      {"p", std::to_string(p)},
                                      {"e", std::to_string(e)},
                                      {"lhs", lhs.get_str()},
                                      {"rhs", rhs.get_str()}});
        }
      }
    }
    report.counters["checked-prime-power"] = pp_checked;
    report.counters["violations-prime-power"] = pp_violations;
    total_violations += pp_violations;
  }

  report.counters["violations"] = total_violations;
  finalize_digest(report);
  report.wall_seconds = watch.seconds();
  return report;
}

ScanReport odd_square_check(unsigned weight, std::uint64_t limit) {
  if (limit < 1) throw std::invalid_argument("limit must be at least 1");
  Stopwatch watch;
  auto table = tau_table_at_least(weight, limit);

  ScanReport report;
  report.kind = "odd-square";
  report.parameters["weight"] = std::to_string(weight);
  report.parameters["limit"] = std::to_string(limit);

  std::uint64_t odd_values = 0, odd_squares = 0, violations = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    bool tau_odd = mpz_odd_p(table->tau(n).get_mpz_t()) != 0;
    bool odd_square = (n % 2 == 1) && is_perfect_square(Int(n));
    if (tau_odd) ++odd_values;
    if (odd_square) ++odd_squares;
    if (tau_odd != odd_square) {
      ++violations;
      report.witnesses.push_back({{"n", std::to_string(n)},
                                  {"tau-odd", tau_odd ? "true" : "false"},
                                  {"odd-square", odd_square ? "true" : "false"}});
    }
  }
  report.counters["checked"] = limit;
  report.counters["odd-values"] = odd_values;
  report.counters["odd-squares"] = odd_squares;
  report.counters["violations"] = violations;
  finalize_digest(report);
  report.wall_seconds = watch.seconds();
  return report;
}

}  // namespace cuspforms
