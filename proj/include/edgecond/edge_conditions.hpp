#pragma once

// The edge-condition functions f1, f2 in the reduced coordinates
// (alpha1, beta1), their constrained derivatives d1, d2, and the
// realizability inequality that bounds b for a given a.

#include <optional>

#include "edgecond/simplex.hpp"

namespace edgecond {

/// A point (alpha1, beta1) for given (a, b). alpha2 and beta2 are always
/// derived from the angle-sum constraints, never stored.
struct AngleSlice {
  double alpha1 = 0.0;
  double beta1 = 0.0;
  SimplexParams params;

  double alpha2() const;
  double beta2() const;
  DihedralAngles angles() const;

  /// alpha1 in [0, pi/a] and beta1 in [0, pi/b].
  bool in_closed_box() const;
};

// Raw four-angle forms. These do not assume the constraints hold.

/// 1 - cos^2 a1 - cos^2 a2 - cos^2 b1 - 2 cos a1 cos a2 cos b1
double b00_minor(const DihedralAngles& g);
/// 1 - cos^2 a1 - cos^2 b1 - cos^2 b2 - 2 cos a1 cos b1 cos b2
double b11_minor(const DihedralAngles& g);

/// Fully expanded polynomial in the cosines and sines.
double f1(const DihedralAngles& g);
double f2(const DihedralAngles& g);

/// B00 sin^2 beta1 - B11 sin^2 alpha2 (cross-check of the expansion).
double f1_minor_form(const DihedralAngles& g);
/// B11 sin^2 alpha1 - B00 sin^2 beta2.
double f2_minor_form(const DihedralAngles& g);

/// df1/dalpha1 - 2 df1/dalpha2 and df2/dbeta1 - 2 df2/dbeta2, the
/// derivatives along alpha2 = 2pi/a - 2 alpha1 (resp. beta2).
double d1(const DihedralAngles& g);
double d2(const DihedralAngles& g);

// Reduced forms on a slice.
double b00_minor(const AngleSlice& s);
double b11_minor(const AngleSlice& s);
double f1(const AngleSlice& s);
double f2(const AngleSlice& s);
double d1(const AngleSlice& s);
double d2(const AngleSlice& s);

struct Inequality {
  double lhs = 0.0;  ///< (1 + cos pi/a) sin 2pi/b
  double rhs = 0.0;  ///< (cos pi/a + cos 2pi/b) sin pi/a
  bool strict = false;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// Absolute tolerance below which the realizability inequality and the
/// boundary value f2(pi/a, 0) are treated as equalities.
inline constexpr double kBoundaryTolerance = 1e-12;

/// Requires b > a >= 2 (InvalidParams otherwise).
/// strict means lhs - rhs > kBoundaryTolerance.
Inequality realizability_inequality(const SimplexParams& params);

/// Largest b in (a, b_limit] satisfying the strict inequality, found by an
/// upward scan. nullopt means the inequality still holds at b_limit.
/// The default limit is 4a. Throws InvalidParams for a < 2 or b_limit <= a.
std::optional<int> compute_bmax(int a, std::optional<int> b_limit = std::nullopt);

/// f2 at (alpha1, beta1) = (pi/a, 0).
double f2_boundary_value(const SimplexParams& params);

/// Sign of f2_boundary_value, with |value| < kBoundaryTolerance mapped to 0.
/// Requires b > a >= 2.
int f2_boundary_sign(const SimplexParams& params);

}  // namespace edgecond
