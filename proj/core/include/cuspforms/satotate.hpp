#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cuspforms/dioph.hpp"
#include "cuspforms/hpreal.hpp"

namespace cuspforms {

class bad_reduction_error : public std::invalid_argument {
 public:
  explicit bad_reduction_error(const std::string& message)
      : std::invalid_argument(message) {}
};

// Angle of a normalized prime coefficient: cos theta = tau_w(p) / (2 p^{(w-1)/2}).
// The square-root bound is checked exactly before any float conversion.
struct AngleSample {
  std::uint64_t p = 0;
  double theta = 0.0;  // in [0, pi]
};

AngleSample angle(unsigned weight, std::uint64_t p, unsigned precision_digits = 30);

// Angle histogram over [0, pi] against the semicircle density (2/pi) sin^2.
struct Histogram {
  std::vector<double> edges;           // bins + 1 ascending edges, 0 .. pi
  std::vector<std::uint64_t> counts;   // per bin, sums to sample_size
  std::vector<double> expected_mass;   // per bin, sums to 1
  std::uint64_t sample_size = 0;
  double chi_square = 0.0;
};

Histogram st_histogram(unsigned weight, std::uint64_t x, unsigned bins,
                       unsigned precision_digits = 30);

// Sum_{p <= x} cos theta_p / sqrt(p); each term is the exact rational
// tau_w(p) / (2 p^{w/2}) rounded once.
HpReal r_sum(unsigned weight, std::uint64_t x, unsigned precision_digits = 30);

// #E(F_p) including the point at infinity, for a model with p-integral
// coefficients and good reduction at p.
std::uint64_t ec_point_count(const WeierstrassCurve& curve, std::uint64_t p);

struct BsdCheckpoint {
  std::uint64_t bound = 0;
  double log_product = 0.0;
};

struct BsdResult {
  HpReal product;                       // Prod_{p <= x, good} N_p / p
  double loglog_slope = 0.0;            // least-squares slope vs log log x
  std::vector<BsdCheckpoint> checkpoints;
  std::uint64_t good_primes = 0;
  std::uint64_t bad_primes = 0;
};

BsdResult bsd_product(const WeierstrassCurve& curve, std::uint64_t x,
                      unsigned precision_digits = 30);

}  // namespace cuspforms
