#pragma once

#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "cuspforms/arith.hpp"

namespace cuspforms {

// Fixed-precision real number with round-to-nearest semantics throughout.
// Binary operations carry the larger precision of their operands, so a
// computation's working precision is set once by its inputs.
class HpReal {
 public:
  explicit HpReal(unsigned digits10 = 30) : HpReal(raw_tag{}, bits_for(digits10)) {}
  HpReal(const Int& value, unsigned digits10) : HpReal(digits10) {
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
  }
  HpReal(const Rat& value, unsigned digits10) : HpReal(digits10) {
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
  }
  HpReal(double value, unsigned digits10) : HpReal(digits10) {
    mpfr_set_d(value_, value, MPFR_RNDN);
  }

  HpReal(const HpReal& other) : HpReal(raw_tag{}, mpfr_get_prec(other.value_)) {
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  HpReal(HpReal&& other) noexcept : HpReal(raw_tag{}, mpfr_get_prec(other.value_)) {
    mpfr_swap(value_, other.value_);
  }
  HpReal& operator=(HpReal other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~HpReal() { mpfr_clear(value_); }

  static mpfr_prec_t bits_for(unsigned digits10) {
    if (digits10 < 2) throw std::invalid_argument("precision must be at least 2 digits");
    return static_cast<mpfr_prec_t>(std::ceil(digits10 * 3.3219280948873623)) + 32;
  }

  mpfr_prec_t precision_bits() const { return mpfr_get_prec(value_); }

  static HpReal pi(unsigned digits10) {
    HpReal out(digits10);
    mpfr_const_pi(out.value_, MPFR_RNDN);
    return out;
  }

  HpReal neg() const { return unary(mpfr_neg); }
  HpReal abs() const { return unary(mpfr_abs); }
  HpReal log() const { return unary(mpfr_log); }
  HpReal exp() const { return unary(mpfr_exp); }
  HpReal sqrt() const { return unary(mpfr_sqrt); }
  HpReal sin() const { return unary(mpfr_sin); }
  HpReal acos() const { return unary(mpfr_acos); }

  HpReal pow_si(long e) const {
    HpReal out(raw_tag{}, mpfr_get_prec(value_));
    mpfr_pow_si(out.value_, value_, e, MPFR_RNDN);
    return out;
  }

  friend HpReal operator+(const HpReal& a, const HpReal& b) { return binary(a, b, mpfr_add); }
  friend HpReal operator-(const HpReal& a, const HpReal& b) { return binary(a, b, mpfr_sub); }
  friend HpReal operator*(const HpReal& a, const HpReal& b) { return binary(a, b, mpfr_mul); }
  friend HpReal operator/(const HpReal& a, const HpReal& b) { return binary(a, b, mpfr_div); }

  int compare(const HpReal& other) const { return mpfr_cmp(value_, other.value_); }
  friend bool operator<(const HpReal& a, const HpReal& b) { return a.compare(b) < 0; }
  friend bool operator>(const HpReal& a, const HpReal& b) { return a.compare(b) > 0; }
  friend bool operator<=(const HpReal& a, const HpReal& b) { return a.compare(b) <= 0; }
  friend bool operator>=(const HpReal& a, const HpReal& b) { return a.compare(b) >= 0; }
  friend bool operator==(const HpReal& a, const HpReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend bool operator!=(const HpReal& a, const HpReal& b) { return !(a == b); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  std::string to_string(unsigned digits10 = 20) const {
    std::string format = "%." + std::to_string(digits10) + "Re";
    int length = mpfr_snprintf(nullptr, 0, format.c_str(), value_);
    if (length < 0) throw std::runtime_error("number formatting failed");
    std::string out(static_cast<std::size_t>(length) + 1, '\0');
    mpfr_snprintf(out.data(), out.size(), format.c_str(), value_);
    out.resize(static_cast<std::size_t>(length));
    return out;
  }

 private:
  struct raw_tag {};
  HpReal(raw_tag, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
  }

  template <typename Fn>
  HpReal unary(Fn fn) const {
    HpReal out(raw_tag{}, mpfr_get_prec(value_));
    fn(out.value_, value_, MPFR_RNDN);
    return out;
  }

  template <typename Fn>
  static HpReal binary(const HpReal& a, const HpReal& b, Fn fn) {
    HpReal out(raw_tag{}, std::max(mpfr_get_prec(a.value_), mpfr_get_prec(b.value_)));
    fn(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
  }

  mpfr_t value_;
};

}  // namespace cuspforms
