#include "edgecond/simplex.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "edgecond/edge_conditions.hpp"
#include "edgecond/errors.hpp"

namespace edgecond {

using std::numbers::pi;

SimplexParams normalize_params(int a, int b) {
  if (a < 1 || b < 1) {
    throw InvalidParams(fmt::format("parameters must be natural numbers, got ({}, {})", a, b));
  }
  if (b < a) return {b, a, true};
  return {a, b, false};
}

DihedralAngles angles_from_reduced(const SimplexParams& params, double alpha1, double beta1) {
  return {alpha1, 2.0 * pi / params.a - 2.0 * alpha1, beta1, 2.0 * pi / params.b - 2.0 * beta1};
}

bool satisfies_constraints(const DihedralAngles& g, const SimplexParams& params) {
  constexpr double tol = 1e-12;
  if (std::abs(2.0 * g.alpha1 + g.alpha2 - 2.0 * pi / params.a) > tol) return false;
  if (std::abs(2.0 * g.beta1 + g.beta2 - 2.0 * pi / params.b) > tol) return false;
  for (double x : {g.alpha1, g.alpha2, g.beta1, g.beta2}) {
    if (x < 0.0 || x > pi) return false;
  }
  return true;
}

std::string_view to_string(RealizationClass c) {
  switch (c) {
    case RealizationClass::Spherical: return "Spherical";
    case RealizationClass::HyperbolicIdeal: return "HyperbolicIdeal";
    case RealizationClass::HyperbolicOuter: return "HyperbolicOuter";
    case RealizationClass::NoProperSolution: return "NoProperSolution";
    case RealizationClass::ExcludedSymmetric: return "ExcludedSymmetric";
  }
  return "?";
}

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Proper: return "Proper";
    case VertexClass::Ideal: return "Ideal";
    case VertexClass::Outer: return "Outer";
  }
  return "?";
}

SymMatrix4 build_coxeter_schlafli(const DihedralAngles& g) {
  SymMatrix4 m = SymMatrix4::identity();
  m.set(0, 1, -std::cos(g.beta1));
  m.set(0, 2, -std::cos(g.beta2));
  m.set(0, 3, -std::cos(g.alpha1));
  m.set(1, 2, -std::cos(g.alpha1));
  m.set(1, 3, -std::cos(g.alpha2));
  m.set(2, 3, -std::cos(g.beta1));
  return m;
}

VertexClass classify_vertex(const SymMatrix4& coxeter, int vertex) {
  const Signature s = principal_signature(coxeter, vertex);
  if (s == Signature{3, 0, 0}) return VertexClass::Proper;
  if (s == Signature{2, 0, 1}) return VertexClass::Ideal;
  if (s == Signature{2, 1, 0}) return VertexClass::Outer;
  throw AmbiguousSignature(fmt::format("vertex {} submatrix has signature ({},{},{})", vertex,
                                       s.positive, s.negative, s.zero));
}

std::array<VertexClass, 4> classify_vertices(const SymMatrix4& coxeter) {
  return {classify_vertex(coxeter, 0), classify_vertex(coxeter, 1), classify_vertex(coxeter, 2),
          classify_vertex(coxeter, 3)};
}

RealizationClass classify_realization(const SimplexParams& params) {
  const SimplexParams p = normalize_params(params.a, params.b);
  if (p.a == 1) return RealizationClass::Spherical;
  if (p.a == 2 && p.b == 2) return RealizationClass::HyperbolicIdeal;
  if (p.a == p.b) return RealizationClass::ExcludedSymmetric;
  return realizability_inequality(p).strict ? RealizationClass::HyperbolicOuter
                                            : RealizationClass::NoProperSolution;
}

bool gram_sign_check(const SymMatrix4& gram) {
  return gram(0, 1) < 0.0 && gram(0, 2) < 0.0 && gram(0, 3) < 0.0 && gram(1, 3) < 0.0;
}

}  // namespace edgecond
