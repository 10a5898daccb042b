#include "cuspforms/arith.hpp"

#include <algorithm>

namespace cuspforms {

partial_factorization_error::partial_factorization_error(const Int& input,
                                                         const Int& cofactor)
    : std::runtime_error("factorize: composite cofactor " + cofactor.get_str() +
                         " of " + input.get_str() +
                         " left at the configured effort bound"),
      input_(input),
      cofactor_(cofactor) {}

Int Factorization::value() const {
  Int v = 1;
  for (const auto& [p, e] : factors) v *= pow_int(p, e);
  return v;
}

bool Factorization::is_prime_power_with_exponent(unsigned e) const {
  return factors.size() == 1 && factors.front().second == e;
}

std::string Factorization::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += '*';
    out += factors[i].first.get_str();
    if (factors[i].second > 1) {
      out += '^';
      out += std::to_string(factors[i].second);
    }
  }
  return out;
}

std::vector<Rat> bernoulli_row(unsigned n) {
  std::vector<Rat> row(n + 1);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rat acc;
    Int binom = 1;
    for (unsigned j = 0; j < m; ++j) {
      acc += Rat(binom) * row[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    row[m] = -acc / static_cast<long>(m + 1);
  }
  return row;
}

Rat bernoulli(unsigned n) { return bernoulli_row(n)[n]; }

Int sigma(unsigned s, const Int& n) {
  if (n < 1) throw std::invalid_argument("sigma: n must be positive");
  Int result = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    if (s == 0) {
      result *= e + 1;
      continue;
    }
    Int ps = pow_int(p, s);
    result *= (pow_int(ps, e + 1) - 1) / (ps - 1);
  }
  return result;
}

std::vector<Int> sigma_table(unsigned s, std::size_t limit) {
  std::vector<Int> table(limit + 1);
  for (std::size_t d = 1; d <= limit; ++d) {
    Int ds = pow_int(Int(static_cast<unsigned long>(d)), s);
    for (std::size_t m = d; m <= limit; m += d) table[m] += ds;
  }
  return table;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
  std::vector<std::uint64_t> primes;
  if (x < 2) return primes;
  std::vector<std::uint8_t> composite(x + 1, 0);
  for (std::uint64_t i = 2; i <= x; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    if (i <= x / i)
      for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = 1;
  }
  return primes;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Factorization factorize(const Int& n, std::uint64_t effort_bound) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  Int m = n;
  auto strip = [&](unsigned long p) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return;
    unsigned e = 0;
    do {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
    f.factors.emplace_back(Int(p), e);
  };
  const unsigned long bound =
      static_cast<unsigned long>(std::min<std::uint64_t>(effort_bound, 4'000'000'000ULL));
  if (bound >= 2) strip(2);
  if (bound >= 3) strip(3);
  for (unsigned long d = 5, step = 2; d <= bound; d += step, step = 6 - step) {
    if (mpz_cmp_ui(m.get_mpz_t(), 1) == 0) break;
    if (mpz_cmp_ui(m.get_mpz_t(), d * d) < 0) break;
    strip(d);
  }
  if (m > 1) {
    if (is_prime(m)) {
      f.factors.emplace_back(m, 1);
    } else {
      throw partial_factorization_error(n, m);
    }
  }
  return f;
}

std::uint64_t dim_Mk(std::uint64_t k) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("dim_Mk: weight must be even and >= 4");
  return k % 12 == 2 ? k / 12 : k / 12 + 1;
}

Int gamma0_index(const Int& n) {
  if (n < 1) throw std::invalid_argument("gamma0_index: level must be positive");
  Int index = 1;
  for (const auto& [p, e] : factorize(n).factors)
    index *= pow_int(p, e - 1) * (p + 1);
  return index;
}

Int totient(const Int& n) {
  if (n < 1) throw std::invalid_argument("totient: n must be positive");
  Int t = 1;
  for (const auto& [p, e] : factorize(n).factors)
    t *= pow_int(p, e - 1) * (p - 1);
  return t;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_perfect_square(const Int& n, Int& root) {
  if (!is_perfect_square(n)) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: argument must be non-negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace cuspforms
