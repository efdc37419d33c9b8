#include "edgecond/solver.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>

#include "edgecond/edge_conditions.hpp"
#include "edgecond/errors.hpp"

namespace edgecond {

using std::numbers::pi;

namespace {

constexpr double kJacobianStep = 1e-7;
constexpr double kSafetyFactor = 1.1;
constexpr int kPersistentClampLimit = 1000;
constexpr int kMaxPolishSteps = 100;
constexpr std::array<double, 5> kGainSchedule = {2.0, 4.0, 8.0, 16.0, 32.0};
// Points of the same root found by different routes agree far below this.
constexpr double kSameRoot = 1e-7;

using Jacobian = std::array<std::array<double, 2>, 2>;

double max_abs(const std::array<double, 2>& r) { return std::max(std::abs(r[0]), std::abs(r[1])); }

Jacobian central_jacobian(const EdgeResidual& f, double x, double y) {
  const double h = kJacobianStep;
  const auto fxp = f(x + h, y), fxm = f(x - h, y);
  const auto fyp = f(x, y + h), fym = f(x, y - h);
  Jacobian j{};
  for (std::size_t i = 0; i < 2; ++i) {
    j[i][0] = (fxp[i] - fxm[i]) / (2.0 * h);
    j[i][1] = (fyp[i] - fym[i]) / (2.0 * h);
  }
  return j;
}

struct IterationResult {
  AnglePoint point;
  int steps = 0;
  bool persistently_clamped = false;
};

IterationResult run_fixed_point(const SimplexParams& params, const DomainBox& box,
                                const Gains& gains, const SolverConfig& config) {
  const EdgeResidual f = edge_residual(params);
  IterationResult out;
  out.point = box.center();
  int clamped_run = 0;
  while (out.steps < config.max_iterations) {
    const ContractionStep step = contraction_map(out.point, params, gains, box);
    ++out.steps;
    const double moved = std::max(std::abs(step.point.alpha1 - out.point.alpha1),
                                  std::abs(step.point.beta1 - out.point.beta1));
    out.point = step.point;
    clamped_run = step.clamped ? clamped_run + 1 : 0;
    if (clamped_run >= kPersistentClampLimit) {
      out.persistently_clamped = true;
      break;
    }
    if (moved == 0.0) break;
    if (moved < config.angle_tolerance &&
        max_abs(f(out.point.alpha1, out.point.beta1)) <= config.tolerance) {
      break;
    }
  }
  return out;
}

struct PolishResult {
  AnglePoint point;
  int steps = 0;
};

// Damped Newton with a central-difference Jacobian, confined to `box`.
PolishResult newton_polish(const EdgeResidual& f, AnglePoint start, const DomainBox& box,
                           const SolverConfig& config) {
  PolishResult out{start, 0};
  auto r = f(out.point.alpha1, out.point.beta1);
  double res = max_abs(r);
  for (; out.steps < kMaxPolishSteps; ++out.steps) {
    if (res <= config.tolerance * 1e-2) break;
    const Jacobian j = central_jacobian(f, out.point.alpha1, out.point.beta1);
    const double det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
    if (det == 0.0 || !std::isfinite(det)) break;
    const double dx = (-r[0] * j[1][1] + r[1] * j[0][1]) / det;
    const double dy = (-r[1] * j[0][0] + r[0] * j[1][0]) / det;

    double lambda = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 40; ++halving, lambda *= 0.5) {
      const AnglePoint trial = box.clamp({out.point.alpha1 + lambda * dx, out.point.beta1 + lambda * dy});
      const auto rt = f(trial.alpha1, trial.beta1);
      if (max_abs(rt) < res) {
        out.point = trial;
        r = rt;
        res = max_abs(rt);
        improved = true;
        break;
      }
    }
    if (!improved) break;
    if (res <= config.tolerance && std::max(std::abs(dx), std::abs(dy)) * lambda < config.angle_tolerance) {
      ++out.steps;
      break;
    }
  }
  return out;
}

// Norm of the contraction map on shrinking neighbourhoods of `root`; the
// first neighbourhood certified below 1 wins, else the smallest one tried.
double local_contraction_norm(const SimplexParams& params, const DomainBox& box,
                              const AnglePoint& root, const Gains& gains,
                              const SolverConfig& config) {
  const EdgeResidual f = edge_residual(params);
  double ra = box.alpha_width() / 8.0;
  double rb = box.beta_width() / 8.0;
  double norm = std::numeric_limits<double>::infinity();
  for (int level = 0; level < 16; ++level, ra *= 0.5, rb *= 0.5) {
    const DomainBox local = box.neighbourhood(root, ra, rb);
    norm = estimate_contraction(f, local, gains, config.contraction_resolution, config.execution).norm;
    if (norm < 1.0) break;
  }
  return norm;
}

}  // namespace

std::string_view to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::FixedPoint: return "fixed";
    case SolveMethod::Newton: return "newton";
    case SolveMethod::GridOracle: return "oracle";
    case SolveMethod::Auto: return "auto";
  }
  return "?";
}

std::optional<SolveMethod> parse_solve_method(std::string_view name) {
  for (SolveMethod m : {SolveMethod::FixedPoint, SolveMethod::Newton, SolveMethod::GridOracle,
                        SolveMethod::Auto}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "Solved";
    case SolveStatus::NoProperSolution: return "NoProperSolution";
    case SolveStatus::BoundarySolution: return "BoundarySolution";
    case SolveStatus::Diverged: return "Diverged";
  }
  return "?";
}

void SolverConfig::validate() const {
  if (!(tolerance > 0.0)) throw InvalidParams("tolerance must be positive");
  if (!(angle_tolerance > 0.0)) throw InvalidParams("angle tolerance must be positive");
  if (max_iterations < 1) throw InvalidParams("max_iterations must be at least 1");
  if (k1 && !(*k1 > 0.0)) throw InvalidParams("k1 must be positive");
  if (k2 && !(*k2 > 0.0)) throw InvalidParams("k2 must be positive");
  if (oracle_resolution < 50) throw InvalidParams("oracle resolution must be at least 50");
  if (contraction_resolution < 2) throw InvalidParams("contraction resolution must be at least 2");
}

double SolveReport::max_residual() const {
  return std::max(std::abs(residual_f1), std::abs(residual_f2));
}

EdgeResidual edge_residual(const SimplexParams& params) {
  return [params](double alpha1, double beta1) -> std::array<double, 2> {
    const DihedralAngles g = AngleSlice{alpha1, beta1, params}.angles();
    return {f1(g), f2(g)};
  };
}

ContractionStep contraction_map(const AnglePoint& p, const SimplexParams& params, const Gains& gains,
                                const DomainBox& box) {
  const DihedralAngles g = AngleSlice{p.alpha1, p.beta1, params}.angles();
  const AnglePoint raw{p.alpha1 + f1(g) / gains.k1, p.beta1 + f2(g) / gains.k2};
  const AnglePoint clamped = box.clamp(raw);
  return {clamped, !(clamped == raw)};
}

ContractionEstimate estimate_contraction(const EdgeResidual& residual, const DomainBox& box,
                                         const Gains& gains, std::size_t resolution,
                                         Execution exec) {
  const GridSpec grid{box, std::max<std::size_t>(resolution, 2), std::max<std::size_t>(resolution, 2)};
  // Per node |dg_i/dx_j| with g = x + f / k.
  std::vector<std::array<double, 4>> entries(grid.size());
  for_each_node(grid, exec, [&](std::size_t i, std::size_t j) {
    const Jacobian jf = central_jacobian(residual, grid.alpha_at(i), grid.beta_at(j));
    entries[j * grid.alpha_count + i] = {std::abs(1.0 + jf[0][0] / gains.k1),
                                         std::abs(jf[0][1] / gains.k1),
                                         std::abs(jf[1][0] / gains.k2),
                                         std::abs(1.0 + jf[1][1] / gains.k2)};
  });

  std::array<double, 4> sup{}, inf{};
  sup.fill(-std::numeric_limits<double>::infinity());
  inf.fill(std::numeric_limits<double>::infinity());
  for (const auto& e : entries) {
    for (std::size_t k = 0; k < 4; ++k) {
      sup[k] = std::max(sup[k], e[k]);
      inf[k] = std::min(inf[k], e[k]);
    }
  }
  ContractionEstimate out;
  out.gains = gains;
  out.box = box;
  for (std::size_t k = 0; k < 4; ++k) {
    // Inflate the sampled spread to cover peaks between lattice nodes.
    const double safe = sup[k] + (kSafetyFactor - 1.0) * (sup[k] - inf[k]);
    out.derivative_suprema[k / 2][k % 2] = safe;
  }
  const auto& g = out.derivative_suprema;
  out.norm = std::max(g[0][0] + g[0][1], g[1][0] + g[1][1]);
  return out;
}

Gains auto_gains(const SimplexParams& params, const DomainBox& box, std::size_t resolution,
                 Execution exec) {
  const GridSpec grid{box, std::max<std::size_t>(resolution, 2), std::max<std::size_t>(resolution, 2)};
  double s1 = 0.0, s2 = 0.0;
  for (const EdgeSample& s : sample_edge_system(params, grid, exec)) {
    s1 = std::max(s1, std::abs(s.d1));
    s2 = std::max(s2, std::abs(s.d2));
  }
  return {s1 > 0.0 ? 2.0 * s1 : 1.0, s2 > 0.0 ? 2.0 * s2 : 1.0};
}

ContractionEstimate estimate_contraction(const SimplexParams& params, const DomainBox& box,
                                         const SolverConfig& config) {
  config.validate();
  const EdgeResidual f = edge_residual(params);
  if (config.k1 || config.k2) {
    const Gains base = auto_gains(params, box, config.contraction_resolution, config.execution);
    const Gains gains{config.k1.value_or(base.k1), config.k2.value_or(base.k2)};
    ContractionEstimate est = estimate_contraction(f, box, gains, config.contraction_resolution, config.execution);
    if (!(est.norm < 1.0)) {
      throw NoContraction(fmt::format("gains ({}, {}) give norm {} on the box", gains.k1, gains.k2, est.norm));
    }
    return est;
  }
  const Gains base = auto_gains(params, box, config.contraction_resolution, config.execution);
  double best = std::numeric_limits<double>::infinity();
  for (double m : kGainSchedule) {
    const Gains gains{base.k1 * m / 2.0, base.k2 * m / 2.0};
    ContractionEstimate est = estimate_contraction(f, box, gains, config.contraction_resolution, config.execution);
    if (est.norm < 1.0) return est;
    best = std::min(best, est.norm);
  }
  throw NoContraction(fmt::format("no gain in the schedule contracts; best norm {}", best));
}

Verification verify_point(const SimplexParams& params, const AnglePoint& p) {
  Verification v;
  const SymMatrix4 b = build_coxeter_schlafli(angles_from_reduced(params, p.alpha1, p.beta1));
  v.det_b = determinant(b);
  v.signature = signature(b);
  for (int i = 0; i < 4; ++i) {
    try {
      v.vertex_classes[static_cast<std::size_t>(i)] = classify_vertex(b, i);
    } catch (const AmbiguousSignature&) {
      v.vertex_classes[static_cast<std::size_t>(i)] = std::nullopt;
    }
  }
  v.edge_lengths.fill(std::numeric_limits<double>::quiet_NaN());
  try {
    const SymMatrix4 gram = inverse(b);
    v.gram_signs = gram_sign_check(gram);
    constexpr std::array<std::array<std::size_t, 2>, 4> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 3}}};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      try {
        v.edge_lengths[k] = projective_distance(gram, pairs[k][0], pairs[k][1], Geometry::Hyperbolic);
      } catch (const DomainError&) {
      }
    }
  } catch (const SingularMatrix&) {
    v.gram_signs = false;
  }
  return v;
}

Properness assess_properness(const SimplexParams& params, const AnglePoint& p) {
  Properness out;
  const DihedralAngles g = angles_from_reduced(params, p.alpha1, p.beta1);
  out.positive_angles = g.alpha1 > 0.0 && g.alpha2 > 0.0 && g.beta1 > 0.0 && g.beta2 > 0.0;
  out.inside_domain = domain_for(params).strictly_contains(p);
  const Verification v = verify_point(params, p);
  out.negative_determinant = v.det_b < 0.0;
  out.all_outer = std::all_of(v.vertex_classes.begin(), v.vertex_classes.end(),
                              [](const auto& c) { return c == VertexClass::Outer; });
  out.gram_signs = v.gram_signs;
  return out;
}

std::vector<AnglePoint> proper_roots(const SimplexParams& params, const std::vector<AnglePoint>& roots) {
  std::vector<AnglePoint> out;
  std::copy_if(roots.begin(), roots.end(), std::back_inserter(out),
               [&](const AnglePoint& p) { return assess_properness(params, p).all(); });
  return out;
}

SolveReport solve(const SimplexParams& input, const SolverConfig& config) {
  config.validate();
  const SimplexParams params = normalize_params(input.a, input.b);
  SolveReport rep;
  rep.params = {params.a, params.b, params.swapped || input.swapped};
  rep.method = config.method;
  rep.realization = classify_realization(params);
  if (rep.realization != RealizationClass::HyperbolicOuter &&
      rep.realization != RealizationClass::NoProperSolution) {
    throw InvalidClass(fmt::format("({}, {}) is {}; there is no edge-condition system to solve",
                                   params.a, params.b, to_string(rep.realization)));
  }
  const EdgeResidual f = edge_residual(params);

  const int boundary = f2_boundary_sign(params);
  if (boundary <= 0) {
    rep.status = boundary == 0 ? SolveStatus::BoundarySolution : SolveStatus::NoProperSolution;
    if (boundary == 0) {
      const AnglePoint corner{pi / params.a, 0.0};
      const auto r = f(corner.alpha1, corner.beta1);
      rep.boundary_point = corner;
      rep.residual_f1 = r[0];
      rep.residual_f2 = r[1];
      rep.properness = assess_properness(params, corner);
      rep.verification = verify_point(params, corner);
      rep.improper_roots.push_back(corner);
    }
    return rep;
  }

  const DomainBox box = domain_for(params);
  const Gains base = auto_gains(params, box, config.contraction_resolution, config.execution);
  rep.gains = {config.k1.value_or(base.k1), config.k2.value_or(base.k2)};

  AnglePoint point = box.center();
  bool persistently_clamped = false;
  switch (config.method) {
    case SolveMethod::FixedPoint:
    case SolveMethod::Auto: {
      const IterationResult it = run_fixed_point(params, box, rep.gains, config);
      point = it.point;
      rep.iterations = it.steps;
      persistently_clamped = it.persistently_clamped;
      if (config.method == SolveMethod::Auto && !persistently_clamped) {
        const PolishResult pr = newton_polish(f, point, box, config);
        point = pr.point;
        rep.polish_iterations = pr.steps;
      }
      break;
    }
    case SolveMethod::Newton: {
      const PolishResult pr = newton_polish(f, box.center(), box, config);
      point = pr.point;
      rep.polish_iterations = pr.steps;
      break;
    }
    case SolveMethod::GridOracle: {
      const auto roots = grid_oracle(params, box, config.oracle_resolution, config.execution);
      const auto proper = proper_roots(params, roots);
      if (proper.empty()) {
        rep.status = SolveStatus::NoProperSolution;
        rep.improper_roots = roots;
        return rep;
      }
      const PolishResult pr = newton_polish(f, proper.front(), box, config);
      point = pr.point;
      rep.polish_iterations = pr.steps;
      break;
    }
  }

  const auto r = f(point.alpha1, point.beta1);
  rep.residual_f1 = r[0];
  rep.residual_f2 = r[1];
  rep.properness = assess_properness(params, point);
  rep.verification = verify_point(params, point);

  if (persistently_clamped || !(rep.max_residual() <= config.tolerance)) {
    rep.status = SolveStatus::Diverged;
    return rep;
  }
  rep.contraction_norm_estimate = local_contraction_norm(params, box, point, rep.gains, config);
  if (rep.properness.all()) {
    rep.status = SolveStatus::Solved;
    rep.angles = angles_from_reduced(params, point.alpha1, point.beta1);
  } else {
    rep.status = SolveStatus::NoProperSolution;
    rep.improper_roots.push_back(point);
  }

  // Two roots are known for (2, 3); scan the whole constraint box and list
  // the ones the properness filter rejects.
  if (params.a == 2 && params.b == 3) {
    for (const AnglePoint& root :
         grid_oracle(params, constraint_box(params), config.oracle_resolution, config.execution)) {
      const bool is_solution = std::abs(root.alpha1 - point.alpha1) < kSameRoot &&
                               std::abs(root.beta1 - point.beta1) < kSameRoot;
      if (!is_solution) rep.improper_roots.push_back(root);
    }
  }
  return rep;
}

}  // namespace edgecond
