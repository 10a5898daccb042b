#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cuspforms {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown by factorize() when trial division up to the effort bound leaves a
/// composite cofactor.
class partial_factorization_error : public std::runtime_error {
 public:
  partial_factorization_error(const Int& input, const Int& cofactor);

  const Int& input() const noexcept { return input_; }
  const Int& cofactor() const noexcept { return cofactor_; }

 private:
  Int input_;
  Int cofactor_;
};

/// Prime factorization as an ascending list of (prime, exponent) pairs.
/// The empty list represents 1.
struct Factorization {
  std::vector<std::pair<Int, unsigned>> factors;

  Int value() const;
  bool is_prime_power() const { return factors.size() == 1; }
  bool is_prime_power_with_exponent(unsigned e) const;
  std::string to_string() const;
};

/// B_0..B_n under the convention B_1 = -1/2.
std::vector<Rat> bernoulli_row(unsigned n);
Rat bernoulli(unsigned n);

/// Sum of the s-th powers of the divisors of n (n >= 1).
Int sigma(unsigned s, const Int& n);

/// sigma(s, n) for n = 1..limit; index 0 holds 0 by convention.
std::vector<Int> sigma_table(unsigned s, std::size_t limit);

/// Primes <= x in ascending order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

bool is_prime(const Int& n);

inline constexpr std::uint64_t default_factor_effort = 1'000'000;

/// Canonical prime factorization of n >= 1 by trial division up to
/// effort_bound, with a primality test on the remaining cofactor.
Factorization factorize(const Int& n,
                        std::uint64_t effort_bound = default_factor_effort);

/// Dimension of the space of level-1 modular forms of even weight k >= 4:
/// floor(k/12) when k = 2 (mod 12), floor(k/12) + 1 otherwise.
std::uint64_t dim_Mk(std::uint64_t k);

/// Index of the level-N congruence subgroup: N * prod_{p | N} (1 + 1/p).
Int gamma0_index(const Int& n);

Int totient(const Int& n);

Int pow_int(const Int& base, unsigned long e);
bool is_perfect_square(const Int& n);
bool is_perfect_square(const Int& n, Int& root);
Int isqrt(const Int& n);

std::string to_string(const Int& n);
std::string to_string(const Rat& r);

}  // namespace cuspforms
