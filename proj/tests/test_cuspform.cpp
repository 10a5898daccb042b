#include <doctest.h>

#include <map>
#include <numeric>

#include "cuspforms/cuspform.hpp"

using namespace cuspforms;

namespace {

// tau_w(p) for p in {2,3,5,7}, keyed by weight.
const std::map<unsigned, std::array<long long, 4>> golden_prime_values{
    {12, {-24, 252, 4830, -16744}},
    {16, {216, -3348, 52110, 2822456}},
    {18, {-528, -4284, -1025850, 3225992}},
    {20, {456, 50652, -2377410, -16917544}},
    {22, {-288, -128844, 21640950, -768078808}},
    {26, {-48, -195804, -741989850, 39080597192}},
};

}  // namespace

TEST_CASE("weight-12 table matches the golden first eight coefficients") {
  auto table = tau_table(12, 8);
  std::array<long, 8> expected{1, -24, 252, -1472, 4830, -6048, -16744, 84480};
  REQUIRE(table.order == 8);
  for (std::uint64_t n = 1; n <= 8; ++n) CHECK(table.tau(n) == expected[n - 1]);
  CHECK(table.provenance == TableProvenance::direct_eta_power);
  CHECK(table.id.weight == 12);
  CHECK(table.id.modulus == 691);
  CHECK(table.id.sigma_exponent == 11);
  CHECK_FALSE(table.id.eisenstein_factor_weight.has_value());
}

TEST_CASE("cross-weight tables match the golden prime values") {
  std::array<std::uint64_t, 4> primes{2, 3, 5, 7};
  for (const auto& [weight, values] : golden_prime_values) {
    auto table = tau_table(weight, 7);
    CHECK(table.tau(1) == 1);
    for (std::size_t i = 0; i < primes.size(); ++i)
      CHECK(table.tau(primes[i]) == Int(std::to_string(values[i])));
    if (weight > 12) {
      CHECK(table.provenance == TableProvenance::eisenstein_convolution);
      CHECK(table.id.eisenstein_factor_weight == weight - 12);
    }
  }
}

TEST_CASE("unsupported weights are rejected") {
  CHECK_THROWS_AS(tau_table(14, 8), std::invalid_argument);
  CHECK_THROWS_AS(tau_table(24, 8), std::invalid_argument);
  CHECK_THROWS_AS(congruence_modulus(11), std::invalid_argument);
  CHECK_THROWS_AS(build_tau_table(12, 0), std::invalid_argument);
}

TEST_CASE("congruence moduli table") {
  CHECK(congruence_modulus(12) == 691);
  CHECK(congruence_modulus(16) == 3617);
  CHECK(congruence_modulus(18) == 43867);
  CHECK(congruence_modulus(20) == 617);
  CHECK(congruence_modulus(22) == 593);
  CHECK(congruence_modulus(26) == 657931);
}

TEST_CASE("shared tables grow and are reused") {
  auto first = tau_table_at_least(12, 10);
  auto second = tau_table_at_least(12, 5);
  CHECK(first.get() == second.get());
  auto larger = tau_table_at_least(12, first->order + 1);
  CHECK(larger->order >= first->order + 1);
  CHECK(tau_table(12, 3).order == 3);
  CHECK_THROWS_AS(larger->tau(0), std::out_of_range);
  CHECK_THROWS_AS(larger->tau(larger->order + 1), std::out_of_range);
}

TEST_CASE("hecke identity on the documented examples") {
  CHECK(hecke_check(12, 2, 2));
  CHECK(hecke_check(12, 2, 3));
  CHECK(hecke_check(12, 1, 77));
  auto table = tau_table_at_least(12, 6);
  CHECK(table->tau(6) == table->tau(2) * table->tau(3));
}

TEST_CASE("hecke identity sweep for small arguments across weights") {
  for (unsigned weight : supported_weights) {
    tau_table_at_least(weight, 40 * 40);
    for (std::uint64_t m = 1; m <= 40; ++m)
      for (std::uint64_t n = 1; n <= 40; ++n) CHECK(hecke_check(weight, m, n));
  }
}

TEST_CASE("coefficients are multiplicative on coprime pairs") {
  for (unsigned weight : supported_weights) {
    auto table = tau_table_at_least(weight, 10'000);
    for (std::uint64_t m = 2; m * 2 <= 10'000; ++m)
      for (std::uint64_t n = 2; m * n <= 10'000; ++n) {
        if (std::gcd(m, n) != 1) continue;
        CHECK(table->tau(m * n) == table->tau(m) * table->tau(n));
      }
  }
}

TEST_CASE("prime-power recurrence reproduces table entries") {
  CHECK(tau_prime_power(12, 2, 2) == -1472);
  CHECK(tau_prime_power(12, 2, 3) == 84480);
  CHECK(tau_prime_power(12, 7, 1) == -16744);
  CHECK_THROWS_AS(tau_prime_power(12, 6, 2), std::invalid_argument);
  CHECK_THROWS_AS(tau_prime_power(12, 2, 0), std::invalid_argument);

  for (unsigned weight : supported_weights) {
    auto table = tau_table_at_least(weight, 10'000);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 97ull}) {
      unsigned e = 1;
      for (std::uint64_t power = p; power <= 10'000; power *= p, ++e)
        CHECK(tau_prime_power(weight, p, e) == table->tau(power));
    }
  }
}

TEST_CASE("deligne bound for primes up to one thousand") {
  CHECK(deligne_check(12, 2));
  CHECK(deligne_check(16, 2));
  CHECK_THROWS_AS(deligne_check(12, 10), std::invalid_argument);
  for (unsigned weight : supported_weights)
    for (std::uint64_t p : primes_up_to(1000)) CHECK(deligne_check(weight, p));
}

TEST_CASE("congruence suites are clean at desk scale") {
  for (unsigned weight : supported_weights) {
    auto report = congruence_check(weight, 1000);
    CHECK(report.kind == "congruence");
    CHECK(report.counters.at("violations") == 0);
    CHECK(report.witnesses.empty());
    CHECK(report.counters.at("checked-sigma") == 1000);
    if (weight == 12) {
      CHECK(report.counters.at("checked-mod7") == 1000 - 142);
      CHECK(report.counters.at("checked-prime-power") > 168);
    }
    CHECK(report.annotations.at("congruence-modulus") == congruence_modulus(weight).get_str());
  }
}

TEST_CASE("congruence reports are deterministic") {
  auto a = congruence_check(22, 400);
  auto b = congruence_check(22, 400);
  CHECK(render_json(a, false) == render_json(b, false));
  CHECK(a.input_digest == b.input_digest);
}

TEST_CASE("odd coefficients occur exactly at odd squares") {
  auto report = odd_square_check(12, 1000);
  CHECK(report.counters.at("violations") == 0);
  CHECK(report.counters.at("odd-values") == 16);
  CHECK(report.counters.at("odd-squares") == 16);
  auto report16 = odd_square_check(16, 500);
  CHECK(report16.counters.at("violations") == 0);
}
