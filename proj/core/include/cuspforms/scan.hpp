#pragma once

#include <cstdint>

#include "cuspforms/report.hpp"

namespace cuspforms {

// Prime scans over shared coefficient tables.  block_size only controls the
// internal partitioning; it never appears in the report, and any partition of
// the range produces byte-identical output.

// Primes p <= limit with tau_w(p) = 0 (expected none).
ScanReport lehmer_scan(unsigned weight, std::uint64_t limit, std::uint64_t block_size = 0);

// Count of primes p <= x with tau_w(p) congruent to a mod q, q prime.
ScanReport residue_density(unsigned weight, std::uint64_t q, std::uint64_t a, std::uint64_t x,
                           std::uint64_t block_size = 0);

// Sign counts of tau_w(p) over primes p <= x in the class p = a mod q;
// q = 1 scans every prime.
ScanReport sign_stats(unsigned weight, std::uint64_t q, std::uint64_t a, std::uint64_t x,
                      std::uint64_t block_size = 0);

// Number of distinct values among tau_w(1..x).
ScanReport value_set_count(unsigned weight, std::uint64_t x, std::uint64_t block_size = 0);

// Primes p <= limit with tau_w(p) congruent to 0 mod p.
ScanReport nonordinary_scan(unsigned weight, std::uint64_t limit, std::uint64_t block_size = 0);

}  // namespace cuspforms
