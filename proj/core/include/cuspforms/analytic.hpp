#pragma once

#include <cstdint>

#include "cuspforms/arith.hpp"
#include "cuspforms/hpreal.hpp"

namespace cuspforms {

// Truncation parameters for the coefficient Dirichlet series and its Euler
// product. The evaluation point must satisfy 2s > w + 1 so both truncations
// converge comfortably.
struct LSeriesParams {
  unsigned weight = 12;
  Rat s;
  std::uint64_t series_terms = 0;  // Dirichlet truncation N
  std::uint64_t prime_bound = 0;   // Euler truncation: primes <= P
  unsigned precision_digits = 30;

  void validate() const;
};

// Sum_{n <= N} tau_w(n) n^{-s}.
HpReal dirichlet_partial(const LSeriesParams& params);

// Prod_{p <= P} (1 - tau_w(p) p^{-s} + p^{w-1-2s})^{-1}.
HpReal euler_partial(const LSeriesParams& params);

}  // namespace cuspforms
