#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cuspforms/arith.hpp"

namespace cuspforms {

/// Thrown when an eta-product specification carries a negative exponent.
class negative_exponent_error : public std::invalid_argument {
 public:
  explicit negative_exponent_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Truncated power series in q with exact coefficients a(0..N); index n holds
/// the coefficient of q^n.  Arithmetic never reads or writes past the
/// truncation order.
template <typename Coeff>
struct BasicQSeries {
  BasicQSeries() : coeff(1) {}
  explicit BasicQSeries(std::size_t order) : coeff(order + 1) {}

  std::vector<Coeff> coeff;

  std::size_t order() const { return coeff.size() - 1; }
  const Coeff& at(std::size_t n) const { return coeff.at(n); }
  Coeff& at(std::size_t n) { return coeff.at(n); }

  std::size_t nonzero_count(std::size_t up_to) const {
    std::size_t count = 0;
    for (std::size_t n = 0; n <= up_to && n < coeff.size(); ++n)
      if (coeff[n] != 0) ++count;
    return count;
  }
};

using QSeries = BasicQSeries<Int>;
using QSeriesQ = BasicQSeries<Rat>;

/// Equality up to the smaller of the two truncation orders.
bool series_equal(const QSeries& a, const QSeries& b);
bool series_equal(const QSeriesQ& a, const QSeriesQ& b);

/// Exact convolution product truncated at the given order.  Both inputs must
/// be truncated at >= order.
QSeries series_mul(const QSeries& a, const QSeries& b, std::size_t order);
QSeriesQ series_mul(const QSeriesQ& a, const QSeriesQ& b, std::size_t order);

/// a^e (e >= 1) truncated at the given order.
QSeries series_pow(const QSeries& a, unsigned e, std::size_t order);

/// Pentagonal-number expansion of prod_{n>=1} (1 - q^n), without the
/// fractional power-of-q prefactor.
QSeries eta_series(std::size_t order);

/// sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}, the cube of eta_series.
QSeries jacobi_cube_series(std::size_t order);

/// prod_{n>=1} (1 - q^n)^r for r >= 1.
QSeries eta_power_series(unsigned r, std::size_t order);

/// Product specification prod_d prod_n (1 - q^{d n})^{r_d}.  Scales d must be
/// distinct and positive; exponents must be positive.
struct EtaProductSpec {
  std::vector<std::pair<unsigned, int>> factors;

  /// Half the sum of the exponents, as an exact rational.
  Rat weight() const;
  /// sum_d d * r_d / 24, the exponent of the power-of-q prefactor that is
  /// carried separately from the integer-exponent series.
  Rat prefactor_exponent() const;
  void validate() const;
};

QSeries eta_product_series(const EtaProductSpec& spec, std::size_t order);

/// Weight-w Eisenstein series 1 - (2w/B_w) sum_{m>=1} sigma_{w-1}(m) q^m with
/// exact rational coefficients (w even, >= 4).
QSeriesQ eisenstein_series(unsigned w, std::size_t order);

/// Eisenstein series with coefficients converted to integers; throws
/// std::domain_error if any coefficient is non-integral.
QSeries eisenstein_series_int(unsigned w, std::size_t order);

/// #{1 <= n <= x : a(n) != 0} / x as an exact rational (x <= truncation order).
Rat lacunarity_density(const QSeries& a, std::size_t x);

}  // namespace cuspforms
