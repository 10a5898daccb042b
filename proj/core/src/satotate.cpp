#include "cuspforms/satotate.hpp"

#include <algorithm>
#include <cmath>

#include "cuspforms/cuspform.hpp"

namespace cuspforms {

namespace {

double angle_from_tau(unsigned weight, std::uint64_t p, const Int& tau,
                      unsigned precision_digits) {
  Int p_power = pow_int(Int(static_cast<unsigned long>(p)), weight - 1);
  if (tau * tau > 4 * p_power)
    throw std::logic_error("coefficient violates the square-root bound at p = " +
                           std::to_string(p));
  HpReal denom = HpReal(Int(2), precision_digits) * HpReal(p_power, precision_digits).sqrt();
  HpReal ratio = HpReal(tau, precision_digits) / denom;
  HpReal one(Int(1), precision_digits);
  if (ratio > one) ratio = one;
  if (ratio < one.neg()) ratio = one.neg();
  return ratio.acos().to_double();
}

std::uint64_t mod_reduce(const Rat& value, std::uint64_t p) {
  Int modulus(static_cast<unsigned long>(p));
  Int den = value.get_den();
  if (mpz_divisible_p(den.get_mpz_t(), modulus.get_mpz_t()))
    throw bad_reduction_error("coefficient denominator vanishes mod p = " + std::to_string(p));
  Int num_mod, den_mod, den_inv;
  mpz_mod(num_mod.get_mpz_t(), value.get_num().get_mpz_t(), modulus.get_mpz_t());
  mpz_mod(den_mod.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  if (mpz_invert(den_inv.get_mpz_t(), den_mod.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw bad_reduction_error("coefficient denominator vanishes mod p = " + std::to_string(p));
  Int reduced = (num_mod * den_inv) % modulus;
  return reduced.get_ui();
}

struct ReducedCurve {
  std::uint64_t a1, a2, a3, a4, a6;
};

ReducedCurve reduce_curve(const WeierstrassCurve& curve, std::uint64_t p) {
  return {mod_reduce(curve.a1, p), mod_reduce(curve.a2, p), mod_reduce(curve.a3, p),
          mod_reduce(curve.a4, p), mod_reduce(curve.a6, p)};
}

}  // namespace

AngleSample angle(unsigned weight, std::uint64_t p, unsigned precision_digits) {
  if (precision_digits < 15)
    throw std::invalid_argument("precision must be at least 15 digits");
  if (!is_prime(Int(static_cast<unsigned long>(p))))
    throw std::invalid_argument("angle requires a prime index");
  auto table = tau_table_at_least(weight, p);
  return {p, angle_from_tau(weight, p, table->tau(p), precision_digits)};
}

Histogram st_histogram(unsigned weight, std::uint64_t x, unsigned bins,
                       unsigned precision_digits) {
  if (bins < 2) throw std::invalid_argument("histogram needs at least two bins");
  if (precision_digits < 15)
    throw std::invalid_argument("precision must be at least 15 digits");

  Histogram h;
  h.counts.assign(bins, 0);
  h.expected_mass.assign(bins, 0.0);

  HpReal pi_value = HpReal::pi(precision_digits);
  HpReal bin_count(Int(static_cast<long>(bins)), precision_digits);
  HpReal two(Int(2), precision_digits);
  h.edges.resize(bins + 1);
  for (unsigned i = 0; i <= bins; ++i) {
    HpReal edge = pi_value * HpReal(Int(static_cast<long>(i)), precision_digits) / bin_count;
    h.edges[i] = edge.to_double();
  }
  for (unsigned i = 0; i < bins; ++i) {
    HpReal a = pi_value * HpReal(Int(static_cast<long>(i)), precision_digits) / bin_count;
    HpReal b = pi_value * HpReal(Int(static_cast<long>(i) + 1), precision_digits) / bin_count;
    HpReal mass = ((b - a) - ((two * b).sin() - (two * a).sin()) / two) / pi_value;
    h.expected_mass[i] = mass.to_double();
  }

  auto primes = primes_up_to(x);
  if (!primes.empty()) {
    auto table = tau_table_at_least(weight, x);
    const double pi_double = HpReal::pi(precision_digits).to_double();
    for (std::uint64_t p : primes) {
      double theta = angle_from_tau(weight, p, table->tau(p), precision_digits);
      auto idx = static_cast<long>(theta / pi_double * bins);
      idx = std::clamp(idx, 0L, static_cast<long>(bins) - 1);
      ++h.counts[static_cast<std::size_t>(idx)];
    }
  }
  h.sample_size = primes.size();

  if (h.sample_size > 0) {
    double chi = 0.0;
    for (unsigned i = 0; i < bins; ++i) {
      double expected = h.expected_mass[i] * static_cast<double>(h.sample_size);
      if (expected <= 0.0) continue;
      double delta = static_cast<double>(h.counts[i]) - expected;
      chi += delta * delta / expected;
    }
    h.chi_square = chi;
  }
  return h;
}

HpReal r_sum(unsigned weight, std::uint64_t x, unsigned precision_digits) {
  if (precision_digits < 15)
    throw std::invalid_argument("precision must be at least 15 digits");
  HpReal sum(precision_digits);
  if (x < 2) return sum;

  auto primes = primes_up_to(x);
  auto table = tau_table_at_least(weight, x);
  for (std::uint64_t p : primes) {
    Rat term(table->tau(p), 2 * pow_int(Int(static_cast<unsigned long>(p)), weight / 2));
    term.canonicalize();
    sum = sum + HpReal(term, precision_digits);
  }
  return sum;
}

std::uint64_t ec_point_count(const WeierstrassCurve& curve, std::uint64_t p) {
  if (p > (std::uint64_t{1} << 31))
    throw std::invalid_argument("modulus too large for enumeration");
  if (!is_prime(Int(static_cast<unsigned long>(p))))
    throw std::invalid_argument("point counting requires a prime modulus");

  CurveInvariants inv = curve_invariants(curve);
  if (inv.disc == 0) throw bad_reduction_error("singular model has no good reduction");
  Int modulus(static_cast<unsigned long>(p));
  if (mpz_divisible_p(inv.disc.get_num().get_mpz_t(), modulus.get_mpz_t()) ||
      mpz_divisible_p(inv.disc.get_den().get_mpz_t(), modulus.get_mpz_t()))
    throw bad_reduction_error("bad reduction at p = " + std::to_string(p));

  ReducedCurve c = reduce_curve(curve, p);

  if (p == 2) {
    std::uint64_t count = 1;
    for (std::uint64_t x = 0; x < 2; ++x)
      for (std::uint64_t y = 0; y < 2; ++y) {
        std::uint64_t lhs = (y * y + c.a1 * x * y + c.a3 * y) % 2;
        std::uint64_t rhs = (x * x * x + c.a2 * x * x + c.a4 * x + c.a6) % 2;
        if (lhs == rhs) ++count;
      }
    return count;
  }

  std::vector<bool> is_square(p, false);
  for (std::uint64_t i = 0; i <= (p - 1) / 2; ++i) is_square[(i * i) % p] = true;

  std::int64_t chi_sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t linear = (c.a1 * x + c.a3) % p;
    std::uint64_t cubic = (((x + c.a2) % p * x + c.a4) % p * x + c.a6) % p;
    std::uint64_t d = (linear * linear + 4 * cubic) % p;
    if (d == 0) continue;
    chi_sum += is_square[d] ? 1 : -1;
  }
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + 1 + chi_sum);
}

BsdResult bsd_product(const WeierstrassCurve& curve, std::uint64_t x,
                      unsigned precision_digits) {
  if (x < 3) throw std::invalid_argument("bound must be at least 3");
  if (precision_digits < 15)
    throw std::invalid_argument("precision must be at least 15 digits");
  CurveInvariants inv = curve_invariants(curve);
  if (inv.disc == 0) throw bad_reduction_error("singular model has no good reduction");

  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t c = 4; c < x; c *= 2) checkpoints.push_back(c);
  checkpoints.push_back(x);

  BsdResult out;
  out.product = HpReal(Int(1), precision_digits);
  std::size_t next = 0;
  for (std::uint64_t p : primes_up_to(x)) {
    while (next < checkpoints.size() && checkpoints[next] < p) {
      out.checkpoints.push_back({checkpoints[next], out.product.log().to_double()});
      ++next;
    }
    try {
      std::uint64_t count = ec_point_count(curve, p);
      Rat local(Int(static_cast<unsigned long>(count)), Int(static_cast<unsigned long>(p)));
      local.canonicalize();
      out.product = out.product * HpReal(local, precision_digits);
      ++out.good_primes;
    } catch (const bad_reduction_error&) {
      ++out.bad_primes;
    }
  }
  while (next < checkpoints.size()) {
    out.checkpoints.push_back({checkpoints[next], out.product.log().to_double()});
    ++next;
  }

  if (out.checkpoints.size() >= 2) {
    double t_mean = 0.0, y_mean = 0.0;
    for (const auto& cp : out.checkpoints) {
      t_mean += std::log(std::log(static_cast<double>(cp.bound)));
      y_mean += cp.log_product;
    }
    const auto n = static_cast<double>(out.checkpoints.size());
    t_mean /= n;
    y_mean /= n;
    double num = 0.0, den = 0.0;
    for (const auto& cp : out.checkpoints) {
      double t = std::log(std::log(static_cast<double>(cp.bound))) - t_mean;
      num += t * (cp.log_product - y_mean);
      den += t * t;
    }
    if (den > 0.0) out.loglog_slope = num / den;
  }
  return out;
}

}  // namespace cuspforms
