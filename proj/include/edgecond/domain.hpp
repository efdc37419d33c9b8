#pragma once

#include "edgecond/simplex.hpp"

namespace edgecond {

/// A point in the reduced coordinates (alpha1, beta1).
struct AnglePoint {
  double alpha1 = 0.0;
  double beta1 = 0.0;

  friend bool operator==(const AnglePoint&, const AnglePoint&) = default;
};

/// Axis-aligned box in (alpha1, beta1).
struct DomainBox {
  double alpha1_lo = 0.0;
  double alpha1_hi = 0.0;
  double beta1_lo = 0.0;
  double beta1_hi = 0.0;

  double alpha_width() const { return alpha1_hi - alpha1_lo; }
  double beta_width() const { return beta1_hi - beta1_lo; }
  AnglePoint center() const;
  bool contains(const AnglePoint& p) const;
  bool strictly_contains(const AnglePoint& p) const;
  AnglePoint clamp(const AnglePoint& p) const;

  /// Intersection with a box of half-widths (ra, rb) centred at p.
  DomainBox neighbourhood(const AnglePoint& p, double ra, double rb) const;

  friend bool operator==(const DomainBox&, const DomainBox&) = default;
};

/// Restricted search domain:
///   a = 2:  [pi/3, pi/2]  x [0, pi/b]
///   a = 3:  [pi/12, pi/3] x [0, pi/b]
///   a >= 4: [0, pi/a]     x [0, pi/b]
/// Throws InvalidParams unless b > a >= 2.
DomainBox domain_for(const SimplexParams& params);

/// The box implied by the angle-sum constraints alone: [0, pi/a] x [0, pi/b].
DomainBox constraint_box(const SimplexParams& params);

}  // namespace edgecond
