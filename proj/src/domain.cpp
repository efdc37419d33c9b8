#include "edgecond/domain.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numbers>

#include "edgecond/errors.hpp"

namespace edgecond {

using std::numbers::pi;

AnglePoint DomainBox::center() const {
  return {0.5 * (alpha1_lo + alpha1_hi), 0.5 * (beta1_lo + beta1_hi)};
}

bool DomainBox::contains(const AnglePoint& p) const {
  return p.alpha1 >= alpha1_lo && p.alpha1 <= alpha1_hi && p.beta1 >= beta1_lo &&
         p.beta1 <= beta1_hi;
}

bool DomainBox::strictly_contains(const AnglePoint& p) const {
  return p.alpha1 > alpha1_lo && p.alpha1 < alpha1_hi && p.beta1 > beta1_lo && p.beta1 < beta1_hi;
}

AnglePoint DomainBox::clamp(const AnglePoint& p) const {
  return {std::clamp(p.alpha1, alpha1_lo, alpha1_hi), std::clamp(p.beta1, beta1_lo, beta1_hi)};
}

DomainBox DomainBox::neighbourhood(const AnglePoint& p, double ra, double rb) const {
  return {std::max(alpha1_lo, p.alpha1 - ra), std::min(alpha1_hi, p.alpha1 + ra),
          std::max(beta1_lo, p.beta1 - rb), std::min(beta1_hi, p.beta1 + rb)};
}

DomainBox domain_for(const SimplexParams& params) {
  if (params.a < 2 || params.b <= params.a) {
    throw InvalidParams(
        fmt::format("search domain requires b > a >= 2, got ({}, {})", params.a, params.b));
  }
  const double beta_hi = pi / params.b;
  if (params.a == 2) return {pi / 3.0, pi / 2.0, 0.0, beta_hi};
  if (params.a == 3) return {pi / 12.0, pi / 3.0, 0.0, beta_hi};
  return {0.0, pi / params.a, 0.0, beta_hi};
}

DomainBox constraint_box(const SimplexParams& params) {
  if (params.a < 1 || params.b < 1) {
    throw InvalidParams(fmt::format("invalid parameters ({}, {})", params.a, params.b));
  }
  return {0.0, pi / params.a, 0.0, pi / params.b};
}

}  // namespace edgecond
