#include <doctest.h>

#include <numeric>
#include <random>

#include "cuspforms/arith.hpp"
#include "oracles.hpp"

using namespace cuspforms;

TEST_CASE("bernoulli base values") {
  CHECK(bernoulli(0) == Rat(1));
  CHECK(bernoulli(1) == Rat(-1, 2));
  CHECK(bernoulli(2) == Rat(1, 6));
  CHECK(bernoulli(10) == Rat(5, 66));
  CHECK(bernoulli(12) == Rat(-691, 2730));
}

TEST_CASE("bernoulli row matches the Akiyama-Tanigawa oracle up to 61") {
  auto row = bernoulli_row(61);
  auto oracle = testing::bernoulli_akiyama_tanigawa(61);
  REQUIRE(row.size() == oracle.size());
  for (std::size_t n = 0; n < row.size(); ++n) CHECK(row[n] == oracle[n]);
}

TEST_CASE("bernoulli vanishes at odd n >= 3") {
  auto row = bernoulli_row(61);
  for (unsigned n = 3; n <= 61; n += 2) CHECK(row[n] == 0);
}

TEST_CASE("sigma small values") {
  CHECK(sigma(11, 1) == 1);
  CHECK(sigma(11, 2) == 2049);
  CHECK(sigma(3, 7) == 344);
  CHECK(sigma(0, 12) == 6);
  CHECK(sigma(1, 28) == 56);
  CHECK_THROWS_AS(sigma(3, 0), std::invalid_argument);
}

TEST_CASE("sigma agrees with direct divisor enumeration") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    CHECK(sigma(3, n) == testing::sigma_by_division(3, n));
    CHECK(sigma(11, n) == testing::sigma_by_division(11, n));
  }
}

TEST_CASE("sigma is multiplicative on coprime arguments") {
  std::mt19937 rng(20260822);
  std::uniform_int_distribution<std::uint64_t> dist(1, 10000);
  int tried = 0;
  while (tried < 200) {
    std::uint64_t m = dist(rng), n = dist(rng);
    if (std::gcd(m, n) != 1) continue;
    ++tried;
    for (unsigned s : {1u, 3u, 11u})
      CHECK(sigma(s, Int(m * n)) == sigma(s, Int(m)) * sigma(s, Int(n)));
  }
}

TEST_CASE("sigma_table matches sigma pointwise") {
  for (unsigned s : {3u, 11u}) {
    auto table = sigma_table(s, 500);
    CHECK(table[0] == 0);
    for (std::uint64_t n = 1; n <= 500; ++n) CHECK(table[n] == sigma(s, n));
  }
}

TEST_CASE("primes_up_to small ranges") {
  CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
}

TEST_CASE("primes_up_to matches the Sundaram oracle at one million") {
  auto primes = primes_up_to(1'000'000);
  CHECK(primes.size() == 78498);
  CHECK(primes == testing::primes_by_sundaram(1'000'000));
}

TEST_CASE("factorize canonical results") {
  auto f = factorize(688);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<Int, unsigned>{2, 4});
  CHECK(f.factors[1] == std::pair<Int, unsigned>{43, 1});
  CHECK(f.to_string() == "2^4*43");
  CHECK_FALSE(f.is_prime_power());

  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1).to_string() == "1");

  auto g = factorize(2048);
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0] == std::pair<Int, unsigned>{2, 11});
  CHECK(g.is_prime_power());
  CHECK(g.is_prime_power_with_exponent(11));
  CHECK_FALSE(g.is_prime_power_with_exponent(10));
}

TEST_CASE("factorize round-trips every n up to 100000") {
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    auto f = factorize(n);
    CHECK(f.value() == n);
    Int prev = 0;
    for (const auto& [p, e] : f.factors) {
      CHECK(p > prev);
      CHECK(e >= 1);
      CHECK(is_prime(p));
      prev = p;
    }
  }
}

TEST_CASE("factorize reports composite cofactors beyond the effort bound") {
  Int n = Int("1000003") * Int("1000033");
  try {
    factorize(n, 1000);
    FAIL("expected partial_factorization_error");
  } catch (const partial_factorization_error& e) {
    CHECK(e.input() == n);
    CHECK(e.cofactor() == n);
  }
  auto f = factorize(n, 1'100'000);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.value() == n);
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("dim_Mk follows the dimension formula") {
  CHECK(dim_Mk(4) == 1);
  CHECK(dim_Mk(12) == 2);
  CHECK(dim_Mk(14) == 1);
  CHECK(dim_Mk(24) == 3);
  CHECK(dim_Mk(26) == 2);
  CHECK_THROWS_AS(dim_Mk(2), std::invalid_argument);
  CHECK_THROWS_AS(dim_Mk(13), std::invalid_argument);
}

TEST_CASE("gamma0_index multiplies local factors") {
  CHECK(gamma0_index(1) == 1);
  CHECK(gamma0_index(2) == 3);
  CHECK(gamma0_index(12) == 24);
  CHECK(gamma0_index(49) == 56);
  CHECK_THROWS_AS(gamma0_index(0), std::invalid_argument);
}

TEST_CASE("totient basics") {
  CHECK(totient(1) == 1);
  CHECK(totient(12) == 4);
  CHECK(totient(13) == 12);
}

TEST_CASE("perfect square detection") {
  Int root;
  CHECK(is_perfect_square(Int(0)));
  CHECK(is_perfect_square(Int(480249), root));
  CHECK(root == 693);
  CHECK_FALSE(is_perfect_square(Int(467001)));
  CHECK_FALSE(is_perfect_square(Int(-4)));
  CHECK(isqrt(Int(10)) == 3);
}

TEST_CASE("is_prime basics") {
  CHECK(is_prime(2));
  CHECK(is_prime(2411));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-7));
  CHECK_FALSE(is_prime(688));
}
