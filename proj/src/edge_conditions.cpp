#include "edgecond/edge_conditions.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "edgecond/errors.hpp"

namespace edgecond {

using std::numbers::pi;

namespace {

void require_hyperbolic_range(const SimplexParams& p) {
  if (p.a < 2 || p.b <= p.a) {
    throw InvalidParams(fmt::format("requires b > a >= 2, got ({}, {})", p.a, p.b));
  }
}

double sq(double x) { return x * x; }

}  // namespace

double AngleSlice::alpha2() const { return 2.0 * pi / params.a - 2.0 * alpha1; }
double AngleSlice::beta2() const { return 2.0 * pi / params.b - 2.0 * beta1; }
DihedralAngles AngleSlice::angles() const { return {alpha1, alpha2(), beta1, beta2()}; }

bool AngleSlice::in_closed_box() const {
  return alpha1 >= 0.0 && alpha1 <= pi / params.a && beta1 >= 0.0 && beta1 <= pi / params.b;
}

double b00_minor(const DihedralAngles& g) {
  const double ca1 = std::cos(g.alpha1), ca2 = std::cos(g.alpha2), cb1 = std::cos(g.beta1);
  return 1.0 - ca1 * ca1 - ca2 * ca2 - cb1 * cb1 - 2.0 * ca1 * ca2 * cb1;
}

double b11_minor(const DihedralAngles& g) {
  const double ca1 = std::cos(g.alpha1), cb1 = std::cos(g.beta1), cb2 = std::cos(g.beta2);
  return 1.0 - ca1 * ca1 - cb1 * cb1 - cb2 * cb2 - 2.0 * ca1 * cb1 * cb2;
}

double f1(const DihedralAngles& g) {
  const double ca1 = std::cos(g.alpha1), ca2 = std::cos(g.alpha2);
  const double cb1 = std::cos(g.beta1), cb2 = std::cos(g.beta2);
  const double sa2 = std::sin(g.alpha2), sb1 = std::sin(g.beta1);
  return (1.0 - ca1 * ca1 - ca2 * ca2 - cb1 * cb1 - 2.0 * ca1 * ca2 * cb1) * sb1 * sb1 -
         (1.0 - ca1 * ca1 - cb1 * cb1 - cb2 * cb2 - 2.0 * ca1 * cb1 * cb2) * sa2 * sa2;
}

double f2(const DihedralAngles& g) {
  const double ca1 = std::cos(g.alpha1), ca2 = std::cos(g.alpha2);
  const double cb1 = std::cos(g.beta1), cb2 = std::cos(g.beta2);
  const double sa1 = std::sin(g.alpha1), sb2 = std::sin(g.beta2);
  return (1.0 - ca1 * ca1 - cb1 * cb1 - cb2 * cb2 - 2.0 * ca1 * cb1 * cb2) * sa1 * sa1 -
         (1.0 - ca1 * ca1 - ca2 * ca2 - cb1 * cb1 - 2.0 * ca1 * ca2 * cb1) * sb2 * sb2;
}

double f1_minor_form(const DihedralAngles& g) {
  return b00_minor(g) * sq(std::sin(g.beta1)) - b11_minor(g) * sq(std::sin(g.alpha2));
}

double f2_minor_form(const DihedralAngles& g) {
  return b11_minor(g) * sq(std::sin(g.alpha1)) - b00_minor(g) * sq(std::sin(g.beta2));
}

double d1(const DihedralAngles& g) {
  const double sa1 = std::sin(g.alpha1), ca1 = std::cos(g.alpha1);
  const double sa2 = std::sin(g.alpha2), ca2 = std::cos(g.alpha2);
  const double cb1 = std::cos(g.beta1), cb2 = std::cos(g.beta2);
  const double sb1sq = sq(std::sin(g.beta1));
  const double by_alpha1 = (2.0 * sa1 * ca1 + 2.0 * sa1 * ca2 * cb1) * sb1sq -
                           (2.0 * sa1 * ca1 + 2.0 * sa1 * cb1 * cb2) * sa2 * sa2;
  const double by_alpha2 =
      (2.0 * sa2 * ca2 + 2.0 * sa2 * ca1 * cb1) * sb1sq - 2.0 * sa2 * ca2 * b11_minor(g);
  return by_alpha1 - 2.0 * by_alpha2;
}

double d2(const DihedralAngles& g) {
  const double sb1 = std::sin(g.beta1), cb1 = std::cos(g.beta1);
  const double sb2 = std::sin(g.beta2), cb2 = std::cos(g.beta2);
  const double ca1 = std::cos(g.alpha1), ca2 = std::cos(g.alpha2);
  const double sa1sq = sq(std::sin(g.alpha1));
  const double by_beta1 = (2.0 * sb1 * cb1 + 2.0 * sb1 * ca1 * cb2) * sa1sq -
                          (2.0 * sb1 * cb1 + 2.0 * sb1 * ca1 * ca2) * sb2 * sb2;
  const double by_beta2 =
      (2.0 * sb2 * cb2 + 2.0 * sb2 * ca1 * cb1) * sa1sq - 2.0 * sb2 * cb2 * b00_minor(g);
  return by_beta1 - 2.0 * by_beta2;
}

double b00_minor(const AngleSlice& s) { return b00_minor(s.angles()); }
double b11_minor(const AngleSlice& s) { return b11_minor(s.angles()); }
double f1(const AngleSlice& s) { return f1(s.angles()); }
double f2(const AngleSlice& s) { return f2(s.angles()); }
double d1(const AngleSlice& s) { return d1(s.angles()); }
double d2(const AngleSlice& s) { return d2(s.angles()); }

Inequality realizability_inequality(const SimplexParams& params) {
  require_hyperbolic_range(params);
  const double ca = std::cos(pi / params.a), sa = std::sin(pi / params.a);
  Inequality out;
  out.lhs = (1.0 + ca) * std::sin(2.0 * pi / params.b);
  out.rhs = (ca + std::cos(2.0 * pi / params.b)) * sa;
  out.strict = out.lhs - out.rhs > kBoundaryTolerance;
  return out;
}

std::optional<int> compute_bmax(int a, std::optional<int> b_limit) {
  const int limit = b_limit.value_or(4 * a);
  if (a < 2 || limit <= a) {
    throw InvalidParams(fmt::format("compute_bmax requires a >= 2 and b_limit > a, got a={} limit={}",
                                    a, limit));
  }
  // The left side decreases and the right side increases with b, so the
  // first failure ends the scan.
  int best = a;
  for (int b = a + 1; b <= limit; ++b) {
    if (!realizability_inequality({a, b, false}).strict) return best;
    best = b;
  }
  return std::nullopt;
}

double f2_boundary_value(const SimplexParams& params) {
  return f2(AngleSlice{pi / params.a, 0.0, params});
}

int f2_boundary_sign(const SimplexParams& params) {
  require_hyperbolic_range(params);
  const double v = f2_boundary_value(params);
  if (std::abs(v) < kBoundaryTolerance) return 0;
  return v > 0.0 ? 1 : -1;
}

}  // namespace edgecond
