#pragma once

// Family F12 simplex: parameters, dihedral angles and realization classes.

#include <array>
#include <string_view>

#include "edgecond/metric.hpp"

namespace edgecond {

/// Integer parameters (a, b) of the simplex, normalized so that b >= a.
struct SimplexParams {
  int a = 0;
  int b = 0;
  bool swapped = false;  ///< input arrived as (b, a)

  friend bool operator==(const SimplexParams&, const SimplexParams&) = default;
};

/// Throws InvalidParams if a or b is below 1. Swaps into b >= a.
SimplexParams normalize_params(int a, int b);

/// The four dihedral angle classes in radians.
struct DihedralAngles {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;

  friend bool operator==(const DihedralAngles&, const DihedralAngles&) = default;
};

/// alpha2 = 2pi/a - 2 alpha1, beta2 = 2pi/b - 2 beta1.
DihedralAngles angles_from_reduced(const SimplexParams& params, double alpha1, double beta1);

/// Checks the angle-sum constraints (to 1e-12) and that every angle lies in [0, pi].
bool satisfies_constraints(const DihedralAngles& angles, const SimplexParams& params);

enum class RealizationClass {
  Spherical,
  HyperbolicIdeal,
  HyperbolicOuter,
  NoProperSolution,
  ExcludedSymmetric,
};

enum class VertexClass { Proper, Ideal, Outer };

std::string_view to_string(RealizationClass c);
std::string_view to_string(VertexClass c);

/// Unit diagonal; off-diagonals are minus the cosines of the dihedral angle
/// at the edge opposite the two faces:
///   b01 = -cos beta1,  b02 = -cos beta2, b03 = -cos alpha1,
///   b12 = -cos alpha1, b13 = -cos alpha2, b23 = -cos beta1.
SymMatrix4 build_coxeter_schlafli(const DihedralAngles& angles);

/// (3,0,0) -> Proper, (2,0,1) -> Ideal, (2,1,0) -> Outer; anything else
/// throws AmbiguousSignature.
VertexClass classify_vertex(const SymMatrix4& coxeter, int vertex);

std::array<VertexClass, 4> classify_vertices(const SymMatrix4& coxeter);

/// Expects normalized params (b >= a).
RealizationClass classify_realization(const SimplexParams& params);

/// True iff a01, a02, a03 and a13 of the vertex Gram matrix are all
/// strictly negative.
bool gram_sign_check(const SymMatrix4& gram);

}  // namespace edgecond
