#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cuspforms/arith.hpp"
#include "cuspforms/report.hpp"

namespace cuspforms {

class degenerate_elimination_error : public std::runtime_error {
 public:
  explicit degenerate_elimination_error(const std::string& message)
      : std::runtime_error(message) {}
};

class off_curve_point_error : public std::invalid_argument {
 public:
  explicit off_curve_point_error(const std::string& message)
      : std::invalid_argument(message) {}
};

// The three reduced relations tying a hypothesized coefficient value t to the
// unknowns u, v and the plane coordinates x, y.
struct TargetSystem {
  Int t;
  Int modulus{691};

  Int linear_residual(const Int& u, const Int& v) const;
  Int quadratic_residual(const Int& u, const Int& x) const;
  Int cubic_residual(const Int& u, const Int& y) const;
};

TargetSystem build_system(const Int& t);

// Plane cubic 477481 x^3 + x2 x^2 + x1 x + 2764 xy + y1 y + 691 y^2 = 0.
struct Cubic {
  Int x3, x2, x1, xy, y1, y2;

  void validate() const;  // x3 must be 691^2 and y2 must be 691
  bool operator==(const Cubic&) const = default;
};

// Closed-form coefficients as a polynomial family in t.
Cubic general_cubic(const Int& t);

// Independent construction: resultant of the quadratic and cubic relations
// in u, normalized so the y^2 coefficient is 691.
Cubic eliminate(const Int& t);

Int cubic_eval(const Cubic& c, const Int& x, const Int& y);
Rat cubic_eval(const Cubic& c, const Rat& x, const Rat& y);

struct WeierstrassCurve {
  Rat a1, a2, a3, a4, a6;

  bool operator==(const WeierstrassCurve&) const = default;
};

// Substitutes x = -X/691, y = Y/691 and clears denominators to the standard
// Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6 shape.
WeierstrassCurve to_weierstrass(const Cubic& c);

// Y^2 + a1 XY + a3 Y - X^3 - a2 X^2 - a4 X - a6.
Rat weierstrass_residual(const WeierstrassCurve& w, const Rat& X, const Rat& Y);

struct CurveInvariants {
  Rat b2, b4, b6, b8, c4, c6, disc;
  std::optional<Rat> j;  // absent exactly when disc == 0

  const Rat& j_value() const;  // throws domain_error on a singular curve
};

CurveInvariants curve_invariants(const WeierstrassCurve& w);

struct IntegralPoint {
  Int x, y;

  bool operator==(const IntegralPoint&) const = default;
};

// All integer points with |x| <= x_bound, by the perfect-square discriminant
// test on the y-quadratic; ordered by ascending x, then ascending y.
std::vector<IntegralPoint> integral_points(const Cubic& c, const Int& x_bound);

struct BackSubCandidate {
  Int u;
  Rat v;
  bool v_integral = false;
  Rat cubic_y;  // the y forced by the cubic relation at this u
  bool cubic_relation_holds = false;
  std::optional<Factorization> factorization;  // populated for u >= 1
  bool eleventh_prime_power = false;
};

struct BackSubRecord {
  Int t, x, y;
  Int residual;
  bool on_curve = false;
  bool preimage_exists = false;
  std::vector<BackSubCandidate> candidates;  // ascending u
  std::optional<Int> quadratic_solution;     // larger root of the u-quadratic
  std::optional<Int> validated_u;            // candidate passing both relations
};

// Recovers u from (u+1)^2 - t^2 = -691x, then checks each root against the
// cubic relation.  The checked variant rejects points off the cubic.
BackSubRecord back_substitute(const Int& t, const Int& x, const Int& y);
BackSubRecord back_substitute_unchecked(const Int& t, const Int& x, const Int& y);

struct WitnessRecord {
  unsigned weight = 0;
  std::uint64_t p = 0;
  Int t, u, x, y, residual;
};

// Builds the exact point that a true coefficient value induces on its own
// cubic: t = tau(p), u = p^11, with both 691-divisions checked exact.
WitnessRecord known_value_witness(unsigned weight, std::uint64_t p);

// c0 * log(x) / log(log(x)) rounded to 6 decimal places, as an exact rational.
Rat rank_bound_annotation(const Int& x, const Rat& c0);

// Report builders used by the command-line tool and acceptance checks.
ScanReport derive_report(const Int& t);
ScanReport points_report(const Int& t, const Int& x_bound);
ScanReport backsub_report(const Int& t, const Int& x, const Int& y);
ScanReport witness_report(unsigned weight, std::uint64_t p);

}  // namespace cuspforms
