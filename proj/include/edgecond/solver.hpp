#pragma once

// Solves {f1 = 0, f2 = 0} on the restricted domain. The primary route is
// the contraction iteration
//     alpha1 <- alpha1 + f1 / k1,   beta1 <- beta1 + f2 / k2
// followed by a Newton polish. grid_oracle is an independent
// bisection-based root finder used for cross-checking.

#include <array>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "edgecond/domain.hpp"
#include "edgecond/grid.hpp"
#include "edgecond/metric.hpp"
#include "edgecond/simplex.hpp"

namespace edgecond {

enum class SolveMethod {
  FixedPoint,  ///< contraction iteration only
  Newton,      ///< damped Newton from the box centre
  GridOracle,  ///< bisection oracle, then Newton polish
  Auto,        ///< contraction iteration, then Newton polish
};

std::string_view to_string(SolveMethod m);
std::optional<SolveMethod> parse_solve_method(std::string_view name);

struct SolverConfig {
  double tolerance = 1e-11;        ///< bound on max(|f1|, |f2|)
  double angle_tolerance = 1e-12;  ///< fixed-point displacement stop
  int max_iterations = 200000;
  std::optional<double> k1;  ///< manual gains; auto-selected when empty
  std::optional<double> k2;
  SolveMethod method = SolveMethod::Auto;
  std::size_t oracle_resolution = 200;
  std::size_t contraction_resolution = 200;
  Execution execution = Execution::Serial;  ///< lattice kernels inside one solve

  /// Throws InvalidParams on a non-positive tolerance, gain or iteration cap.
  void validate() const;
};

struct Gains {
  double k1 = 1.0;
  double k2 = 1.0;
};

struct ContractionEstimate {
  /// sup |dg_i/dx_j| over the sampled box, with safety margin.
  std::array<std::array<double, 2>, 2> derivative_suprema{};
  double norm = 0.0;  ///< max row sum of derivative_suprema
  Gains gains;
  DomainBox box;
};

enum class SolveStatus { Solved, NoProperSolution, BoundarySolution, Diverged };
std::string_view to_string(SolveStatus s);

struct Properness {
  bool positive_angles = false;
  bool inside_domain = false;
  bool negative_determinant = false;
  bool all_outer = false;
  bool gram_signs = false;

  bool all() const {
    return positive_angles && inside_domain && negative_determinant && all_outer && gram_signs;
  }
};

/// Geometric checks at a candidate root.
struct Verification {
  double det_b = 0.0;
  Signature signature;
  std::array<std::optional<VertexClass>, 4> vertex_classes;  ///< empty = ambiguous
  bool gram_signs = false;
  /// Hyperbolic distances A0A1, A0A2, A0A3, A1A3; NaN when undefined.
  std::array<double, 4> edge_lengths{};
};

struct SolveReport {
  SimplexParams params;
  RealizationClass realization = RealizationClass::NoProperSolution;
  SolveStatus status = SolveStatus::Diverged;
  SolveMethod method = SolveMethod::Auto;
  std::optional<DihedralAngles> angles;  ///< present when Solved
  std::optional<AnglePoint> boundary_point;
  double residual_f1 = 0.0;
  double residual_f2 = 0.0;
  int iterations = 0;         ///< fixed-point steps
  int polish_iterations = 0;  ///< Newton steps
  Gains gains;
  double contraction_norm_estimate = 0.0;
  Properness properness;
  std::optional<Verification> verification;
  std::vector<AnglePoint> improper_roots;

  double max_residual() const;
};

using EdgeResidual = std::function<std::array<double, 2>(double alpha1, double beta1)>;

EdgeResidual edge_residual(const SimplexParams& params);

struct ContractionStep {
  AnglePoint point;
  bool clamped = false;
};

/// One step of (alpha1 + f1/k1, beta1 + f2/k2), clamped into `box`.
ContractionStep contraction_map(const AnglePoint& p, const SimplexParams& params, const Gains& gains,
                                const DomainBox& box);

/// Samples the Jacobian of the contraction map I + diag(1/k) J_f on a
/// resolution x resolution lattice of `box`. J_f uses central differences.
ContractionEstimate estimate_contraction(const EdgeResidual& residual, const DomainBox& box,
                                         const Gains& gains, std::size_t resolution = 200,
                                         Execution exec = Execution::Parallel);

/// Gains k_i = m * S_i with S_1 = sup|d1|, S_2 = sup|d2| over `box`, for m in
/// {2, 4, 8, 16, 32}; the first m giving norm < 1 wins. Manual gains in
/// `config` are validated as given. Throws NoContraction.
ContractionEstimate estimate_contraction(const SimplexParams& params, const DomainBox& box,
                                         const SolverConfig& config);

/// Automatic gains 2 * sup|d1|, 2 * sup|d2| over the box.
Gains auto_gains(const SimplexParams& params, const DomainBox& box, std::size_t resolution,
                 Execution exec);

/// Geometric verification of (alpha1, beta1); never throws.
Verification verify_point(const SimplexParams& params, const AnglePoint& p);

Properness assess_properness(const SimplexParams& params, const AnglePoint& p);

/// Throws InvalidClass for Spherical, HyperbolicIdeal and ExcludedSymmetric
/// parameters, and InvalidParams on a bad config.
SolveReport solve(const SimplexParams& params, const SolverConfig& config = {});

/// Roots of {f1, f2} in `box` located by cell sign tests on a
/// resolution x resolution lattice and refined by nested bisection (f1 along
/// beta1-slices, then f2 along that curve). Returns isolated roots with
/// max(|f1|, |f2|) < 1e-9, sorted by (beta1, alpha1). Resolution below 50
/// throws InvalidParams.
std::vector<AnglePoint> grid_oracle(const SimplexParams& params, const DomainBox& box,
                                    std::size_t resolution = 200,
                                    Execution exec = Execution::Parallel);

/// grid_oracle filtered by assess_properness.
std::vector<AnglePoint> proper_roots(const SimplexParams& params, const std::vector<AnglePoint>& roots);

}  // namespace edgecond
