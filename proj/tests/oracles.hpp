#pragma once

#include <cstdint>
#include <vector>

#include "cuspforms/arith.hpp"
#include "cuspforms/qseries.hpp"

// Independent re-computations used as test oracles.  Each deliberately uses a
// different algorithm from the library implementation it checks.
namespace cuspforms::testing {

/// Bernoulli numbers B_0..B_n by the Akiyama-Tanigawa triangle, adjusted to
/// the B_1 = -1/2 convention.
std::vector<Rat> bernoulli_akiyama_tanigawa(unsigned n);

/// Plain double-loop convolution.
QSeries naive_convolution(const QSeries& a, const QSeries& b,
                          std::size_t order);

/// prod_{n<=order} (1 - q^n)^r expanded one factor at a time.
QSeries dense_eta_product(unsigned r, std::size_t order);

/// Primes <= x via the sieve of Sundaram.
std::vector<std::uint64_t> primes_by_sundaram(std::uint64_t x);

/// Divisor power sum by direct divisor enumeration.
Int sigma_by_division(unsigned s, std::uint64_t n);

}  // namespace cuspforms::testing
