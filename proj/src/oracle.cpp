// Independent root oracle: lattice sign tests plus nested bisection.
// Shares nothing with the iteration/Newton route except f1 and f2.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fmt/format.h>
#include <optional>

#include "edgecond/edge_conditions.hpp"
#include "edgecond/errors.hpp"
#include "edgecond/solver.hpp"

namespace edgecond {

namespace {

constexpr double kAcceptResidual = 1e-9;
// Roots where f1 and f2 vanish to high order (the alpha1 = 0 corner for
// a = 2) have a Jacobian determinant many orders below this.
constexpr double kIsolatedDeterminant = 1e-8;
constexpr double kDuplicate = 1e-7;
constexpr int kSubSamples = 9;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

template <class Fn>
double bisect(Fn&& fn, double lo, double hi, double f_lo) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    if (sign_of(fm) == sign_of(f_lo)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

class CellRefiner {
 public:
  CellRefiner(const SimplexParams& params, const GridSpec& grid) : params_(params), grid_(grid) {}

  std::vector<AnglePoint> refine(std::size_t i, std::size_t j) const {
    const double x0 = grid_.alpha_at(i), x1 = grid_.alpha_at(i + 1);
    const double y0 = grid_.beta_at(j), y1 = grid_.beta_at(j + 1);
    const double w = x1 - x0;
    const double lo = std::max(grid_.box.alpha1_lo, x0 - 2.0 * w);
    const double hi = std::min(grid_.box.alpha1_hi, x1 + 2.0 * w);

    std::array<double, kSubSamples> ys{};
    std::array<std::optional<double>, kSubSamples> hs{};
    for (int k = 0; k < kSubSamples; ++k) {
      ys[k] = (k + 1 == kSubSamples) ? y1 : y0 + (y1 - y0) * k / (kSubSamples - 1);
      hs[k] = curve_f2(ys[k], lo, hi);
    }

    std::vector<AnglePoint> out;
    for (int k = 0; k + 1 < kSubSamples; ++k) {
      if (!hs[k] || !hs[k + 1]) continue;
      if (sign_of(*hs[k]) * sign_of(*hs[k + 1]) > 0) continue;
      double beta = ys[k];
      if (*hs[k] != 0.0) {
        bool defined = true;
        beta = bisect(
            [&](double y) {
              const auto h = curve_f2(y, lo, hi);
              if (!h) defined = false;
              return h.value_or(0.0);
            },
            ys[k], ys[k + 1], *hs[k]);
        if (!defined) continue;
      }
      const auto alpha = slice_root(beta, lo, hi);
      if (!alpha || *alpha < x0 - w || *alpha > x1 + w) continue;
      const AnglePoint p{*alpha, beta};
      if (accept(p)) out.push_back(p);
    }
    return out;
  }

 private:
  double f1_at(double x, double y) const { return f1(AngleSlice{x, y, params_}); }
  double f2_at(double x, double y) const { return f2(AngleSlice{x, y, params_}); }

  // Root of f1(., beta) bracketed in [lo, hi].
  std::optional<double> slice_root(double beta, double lo, double hi) const {
    const double flo = f1_at(lo, beta), fhi = f1_at(hi, beta);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (sign_of(flo) == sign_of(fhi)) return std::nullopt;
    return bisect([&](double x) { return f1_at(x, beta); }, lo, hi, flo);
  }

  // f2 along the f1 = 0 curve.
  std::optional<double> curve_f2(double beta, double lo, double hi) const {
    const auto alpha = slice_root(beta, lo, hi);
    if (!alpha) return std::nullopt;
    return f2_at(*alpha, beta);
  }

  bool accept(const AnglePoint& p) const {
    const double r1 = f1_at(p.alpha1, p.beta1), r2 = f2_at(p.alpha1, p.beta1);
    if (std::max(std::abs(r1), std::abs(r2)) >= kAcceptResidual) return false;
    const double h = 1e-7;
    const double j00 = (f1_at(p.alpha1 + h, p.beta1) - f1_at(p.alpha1 - h, p.beta1)) / (2 * h);
    const double j01 = (f1_at(p.alpha1, p.beta1 + h) - f1_at(p.alpha1, p.beta1 - h)) / (2 * h);
    const double j10 = (f2_at(p.alpha1 + h, p.beta1) - f2_at(p.alpha1 - h, p.beta1)) / (2 * h);
    const double j11 = (f2_at(p.alpha1, p.beta1 + h) - f2_at(p.alpha1, p.beta1 - h)) / (2 * h);
    return std::abs(j00 * j11 - j01 * j10) > kIsolatedDeterminant;
  }

  SimplexParams params_;
  GridSpec grid_;
};

bool brackets_zero(double a, double b, double c, double d) {
  const double lo = std::min({a, b, c, d}), hi = std::max({a, b, c, d});
  return lo <= 0.0 && hi >= 0.0;
}

}  // namespace

std::vector<AnglePoint> grid_oracle(const SimplexParams& params, const DomainBox& box,
                                    std::size_t resolution, Execution exec) {
  if (resolution < 50) {
    throw InvalidParams(fmt::format("oracle resolution {} below 50", resolution));
  }
  const GridSpec grid{box, resolution, resolution};
  const ResidualField field = sample_residuals(params, grid, exec);
  const std::size_t nx = grid.alpha_count;

  std::vector<std::pair<std::size_t, std::size_t>> flagged;
  for (std::size_t j = 0; j + 1 < grid.beta_count; ++j) {
    for (std::size_t i = 0; i + 1 < nx; ++i) {
      const std::size_t k00 = j * nx + i, k10 = k00 + 1, k01 = k00 + nx, k11 = k01 + 1;
      if (brackets_zero(field.f1[k00], field.f1[k10], field.f1[k01], field.f1[k11]) &&
          brackets_zero(field.f2[k00], field.f2[k10], field.f2[k01], field.f2[k11])) {
        flagged.emplace_back(i, j);
      }
    }
  }

  const CellRefiner refiner(params, grid);
  std::vector<std::vector<AnglePoint>> per_cell(flagged.size());
  const auto n = static_cast<std::int64_t>(flagged.size());
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < n; ++c) {
      per_cell[static_cast<std::size_t>(c)] =
          refiner.refine(flagged[static_cast<std::size_t>(c)].first, flagged[static_cast<std::size_t>(c)].second);
    }
  } else {
    for (std::int64_t c = 0; c < n; ++c) {
      per_cell[static_cast<std::size_t>(c)] =
          refiner.refine(flagged[static_cast<std::size_t>(c)].first, flagged[static_cast<std::size_t>(c)].second);
    }
  }

  std::vector<AnglePoint> all;
  for (const auto& cell : per_cell) all.insert(all.end(), cell.begin(), cell.end());
  std::sort(all.begin(), all.end(), [](const AnglePoint& l, const AnglePoint& r) {
    return l.beta1 != r.beta1 ? l.beta1 < r.beta1 : l.alpha1 < r.alpha1;
  });
  std::vector<AnglePoint> unique;
  for (const AnglePoint& p : all) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const AnglePoint& q) {
      return std::abs(p.alpha1 - q.alpha1) < kDuplicate && std::abs(p.beta1 - q.beta1) < kDuplicate;
    });
    if (!dup) unique.push_back(p);
  }
  return unique;
}

}  // namespace edgecond
