#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cuspforms/arith.hpp"
#include "cuspforms/report.hpp"

namespace cuspforms {

inline constexpr std::array<unsigned, 6> supported_weights{12, 16, 18, 20, 22, 26};

bool is_supported_weight(unsigned weight);

// Congruence modulus paired with each supported weight.
Int congruence_modulus(unsigned weight);

struct CuspFormId {
  unsigned weight = 0;
  Int modulus;
  unsigned sigma_exponent = 0;                       // weight - 1
  std::optional<unsigned> eisenstein_factor_weight;  // weight - 12, absent at 12
};

CuspFormId cusp_form_id(unsigned weight);

enum class TableProvenance { direct_eta_power, eisenstein_convolution };

// Exact coefficient table tau_w(1..order).
struct CuspFormTable {
  CuspFormId id;
  std::uint64_t order = 0;
  std::vector<Int> coeff;  // coeff[n-1] = tau_w(n)
  TableProvenance provenance = TableProvenance::direct_eta_power;

  const Int& tau(std::uint64_t n) const;
};

// Pure table construction: weight 12 reads off the 24th eta power, higher
// weights convolve the weight-12 row with the integral Eisenstein factor.
CuspFormTable build_tau_table(unsigned weight, std::uint64_t order);

// Memoized access.  tau_table_at_least shares one growing table per weight;
// tau_table returns a table of exactly the requested order.
std::shared_ptr<const CuspFormTable> tau_table_at_least(unsigned weight, std::uint64_t order);
CuspFormTable tau_table(unsigned weight, std::uint64_t order);

bool hecke_check(unsigned weight, std::uint64_t m, std::uint64_t n);

Int tau_prime_power(unsigned weight, std::uint64_t p, unsigned e);

bool deligne_check(unsigned weight, std::uint64_t p);

ScanReport congruence_check(unsigned weight, std::uint64_t limit);

ScanReport odd_square_check(unsigned weight, std::uint64_t limit);

}  // namespace cuspforms
