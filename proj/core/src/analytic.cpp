#include "cuspforms/analytic.hpp"

#include <stdexcept>

#include "cuspforms/cuspform.hpp"

namespace cuspforms {

void LSeriesParams::validate() const {
  if (!is_supported_weight(weight))
    throw std::invalid_argument("unsupported weight " + std::to_string(weight));
  if (Rat(2) * s <= Rat(static_cast<long>(weight) + 1))
    throw std::invalid_argument("non-convergent regime rejected: need 2s > weight + 1");
  if (precision_digits < 15)
    throw std::invalid_argument("precision must be at least 15 digits");
}

HpReal dirichlet_partial(const LSeriesParams& params) {
  params.validate();
  HpReal sum(params.precision_digits);
  if (params.series_terms == 0) return sum;

  auto table = tau_table_at_least(params.weight, params.series_terms);
  HpReal minus_s = HpReal(params.s, params.precision_digits).neg();
  for (std::uint64_t n = 1; n <= params.series_terms; ++n) {
    HpReal n_real(Int(static_cast<unsigned long>(n)), params.precision_digits);
    HpReal scale = (minus_s * n_real.log()).exp();
    sum = sum + HpReal(table->tau(n), params.precision_digits) * scale;
  }
  return sum;
}

HpReal euler_partial(const LSeriesParams& params) {
  params.validate();
  HpReal one(Int(1), params.precision_digits);
  HpReal product = one;
  auto primes = primes_up_to(params.prime_bound);
  if (primes.empty()) return product;

  auto table = tau_table_at_least(params.weight, params.prime_bound);
  HpReal minus_s = HpReal(params.s, params.precision_digits).neg();
  Rat tail_exponent = Rat(static_cast<long>(params.weight) - 1) - Rat(2) * params.s;
  HpReal tail = HpReal(tail_exponent, params.precision_digits);
  for (std::uint64_t p : primes) {
    HpReal log_p = HpReal(Int(static_cast<unsigned long>(p)), params.precision_digits).log();
    HpReal factor = one - HpReal(table->tau(p), params.precision_digits) * (minus_s * log_p).exp() +
                    (tail * log_p).exp();
    if (factor.is_zero())
      throw std::runtime_error("vanishing local factor at p = " + std::to_string(p));
    product = product / factor;
  }
  return product;
}

}  // namespace cuspforms
