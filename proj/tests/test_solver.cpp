#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "edgecond/edge_conditions.hpp"
#include "edgecond/errors.hpp"
#include "edgecond/solver.hpp"
#include "oracles.hpp"
#include "reference.hpp"

using namespace edgecond;
using std::numbers::pi;

namespace {

const reference::Row& verified(int a, int b) {
  for (const auto& r : reference::kVerifiedRoots) {
    if (r.a == a && r.b == b) return r;
  }
  throw std::out_of_range("no verified root");
}

double dist(const AnglePoint& p, double x, double y) {
  return std::max(std::abs(p.alpha1 - x), std::abs(p.beta1 - y));
}

std::vector<AnglePoint> proper_oracle_roots(int a, int b) {
  const auto p = normalize_params(a, b);
  return proper_roots(p, grid_oracle(p, domain_for(p), 200, Execution::Parallel));
}

}  // namespace

TEST_CASE("config validation") {
  SolverConfig c;
  CHECK_NOTHROW(c.validate());
  c.tolerance = 0.0;
  CHECK_THROWS_AS(c.validate(), InvalidParams);
  c = {};
  c.max_iterations = 0;
  CHECK_THROWS_AS(c.validate(), InvalidParams);
  c = {};
  c.k1 = -1.0;
  CHECK_THROWS_AS(c.validate(), InvalidParams);
  c = {};
  c.angle_tolerance = -1.0;
  CHECK_THROWS_AS(c.validate(), InvalidParams);
  CHECK_THROWS_AS(solve(normalize_params(3, 5), c), InvalidParams);
}

TEST_CASE("method names") {
  for (auto m : {SolveMethod::FixedPoint, SolveMethod::Newton, SolveMethod::GridOracle, SolveMethod::Auto}) {
    CHECK(parse_solve_method(to_string(m)) == m);
  }
  CHECK_FALSE(parse_solve_method("bisect").has_value());
}

TEST_CASE("contraction_map") {
  const auto p = normalize_params(2, 4);
  const DomainBox box = domain_for(p);
  const Gains k = auto_gains(p, box, 200, Execution::Serial);

  const auto& r = verified(2, 4);
  const auto fixed = contraction_map({r.alpha1, r.beta1}, p, k, box);
  CHECK(dist(fixed.point, r.alpha1, r.beta1) < 1e-9);
  CHECK_FALSE(fixed.clamped);

  const auto printed = contraction_map({1.332343, 0.3618578}, p, k, box);
  CHECK(std::abs(printed.point.alpha1 - 1.332343) < 1e-4);
  CHECK(std::abs(printed.point.beta1 - 0.3618578) < 1e-4);

  // A tiny gain throws the point out of the box; it is clamped back.
  const auto wild = contraction_map(box.center(), p, Gains{1e-3, 1e-3}, box);
  CHECK(wild.clamped);
  CHECK(box.contains(wild.point));
}

TEST_CASE("contraction estimate") {
  EdgeResidual zero = [](double, double) { return std::array<double, 2>{0.0, 0.0}; };
  const auto stub = estimate_contraction(zero, DomainBox{0.0, 1.0, 0.0, 1.0}, Gains{}, 60);
  CHECK(stub.norm == 1.0);

  // On the whole box the map cannot contract: d1 >= 0 on the alpha2 = 0
  // face keeps |1 + d1/k1| >= 1 for every positive gain.
  const auto p = normalize_params(2, 4);
  CHECK_THROWS_AS(estimate_contraction(p, domain_for(p), SolverConfig{}), NoContraction);

  // Near the root it does.
  for (auto [a, b] : {std::pair{2, 4}, {3, 5}, {6, 12}}) {
    const auto q = normalize_params(a, b);
    const auto& r = verified(a, b);
    const DomainBox box = domain_for(q);
    const DomainBox near = box.neighbourhood({r.alpha1, r.beta1}, box.alpha_width() / 256, box.beta_width() / 256);
    const Gains k = auto_gains(q, box, 200, Execution::Serial);
    const auto est = estimate_contraction(edge_residual(q), near, k, 200);
    CHECK(est.norm < 1.0);

    // Empirical Lipschitz constant of the map on that neighbourhood.
    std::mt19937_64 rng(static_cast<std::uint64_t>(a * 100 + b));
    std::uniform_real_distribution<double> ux(near.alpha1_lo, near.alpha1_hi), uy(near.beta1_lo, near.beta1_hi);
    for (int t = 0; t < 300; ++t) {
      const AnglePoint x{ux(rng), uy(rng)}, y{ux(rng), uy(rng)};
      const auto gx = contraction_map(x, q, k, near).point, gy = contraction_map(y, q, k, near).point;
      const double num = std::max(std::abs(gx.alpha1 - gy.alpha1), std::abs(gx.beta1 - gy.beta1));
      const double den = std::max(std::abs(x.alpha1 - y.alpha1), std::abs(x.beta1 - y.beta1));
      CHECK(num <= est.norm * den + 1e-15);
    }
  }
}

TEST_CASE("solve reproduces every verified root") {
  for (const auto& r : reference::kVerifiedRoots) {
    const SolveReport rep = solve(normalize_params(r.a, r.b));
    CAPTURE(r.a);
    CAPTURE(r.b);
    REQUIRE(rep.status == SolveStatus::Solved);
    REQUIRE(rep.angles);
    CHECK(std::abs(rep.angles->alpha1 - r.alpha1) < 1e-8);
    CHECK(std::abs(rep.angles->beta1 - r.beta1) < 1e-8);
    CHECK(rep.max_residual() <= SolverConfig{}.tolerance);
    CHECK(rep.properness.all());
    CHECK(rep.contraction_norm_estimate < 1.0);
    CHECK(satisfies_constraints(*rep.angles, rep.params));

    // Independent Newton on the numerically built system lands on the same point.
    const auto [x, y] = oracle::newton(r.a, r.b, rep.angles->alpha1, rep.angles->beta1);
    CHECK(std::abs(x - rep.angles->alpha1) < 1e-9);
    CHECK(std::abs(y - rep.angles->beta1) < 1e-9);

    // Strictly inside the domain, with the a = 2, 3 exclusions.
    const DomainBox box = domain_for(rep.params);
    CHECK(box.strictly_contains({rep.angles->alpha1, rep.angles->beta1}));
    if (r.a == 2) CHECK(rep.angles->alpha1 > pi / 3);
    if (r.a == 3) CHECK(rep.angles->alpha1 > pi / 12);
  }
}

TEST_CASE("printed rows that agree with the roots") {
  // (2,4), (3,4) and (4,5) in the printed table are within 1e-5 of the roots.
  for (auto [a, b, x, y] : {std::tuple{2, 4, 1.332343, 0.3618578}, {3, 4, 0.810013, 0.4270995},
                            {4, 5, 0.6026575, 0.3451357}}) {
    const auto rep = solve(normalize_params(a, b));
    REQUIRE(rep.angles);
    CHECK(std::abs(rep.angles->alpha1 - x) < 1e-5);
    CHECK(std::abs(rep.angles->beta1 - y) < 1e-5);
  }
}

TEST_CASE("verification at solved roots") {
  for (const auto& r : reference::kVerifiedRoots) {
    const SolveReport rep = solve(normalize_params(r.a, r.b));
    REQUIRE(rep.verification);
    const Verification& v = *rep.verification;
    CHECK(v.det_b < 0.0);
    CHECK(v.signature == Signature{3, 1, 0});
    for (const auto& c : v.vertex_classes) CHECK(c == VertexClass::Outer);
    CHECK(v.gram_signs);
    CHECK(std::abs(v.edge_lengths[0] - v.edge_lengths[1]) < 1e-9);
    CHECK(std::abs(v.edge_lengths[2] - v.edge_lengths[3]) < 1e-9);
  }
}

TEST_CASE("boundary and empty cases") {
  const SolveReport r28 = solve(normalize_params(2, 8));
  CHECK(r28.status == SolveStatus::BoundarySolution);
  REQUIRE(r28.boundary_point);
  CHECK(r28.boundary_point->alpha1 == doctest::Approx(pi / 2));
  CHECK(r28.boundary_point->beta1 == 0.0);
  CHECK_FALSE(r28.angles);

  const SolveReport r29 = solve(normalize_params(2, 9));
  CHECK(r29.status == SolveStatus::NoProperSolution);
  CHECK_FALSE(r29.angles);
  CHECK(f2_boundary_value(normalize_params(2, 9)) < 0.0);

  CHECK(solve(normalize_params(4, 10)).status == SolveStatus::NoProperSolution);
}

TEST_CASE("unsolvable classes are rejected") {
  CHECK_THROWS_AS(solve(normalize_params(1, 5)), InvalidClass);
  CHECK_THROWS_AS(solve(normalize_params(2, 2)), InvalidClass);
  CHECK_THROWS_AS(solve(normalize_params(4, 4)), InvalidClass);
}

TEST_CASE("the (2,3) case reports its improper root") {
  const SolveReport rep = solve(normalize_params(2, 3));
  REQUIRE(rep.status == SolveStatus::Solved);
  CHECK(std::abs(rep.angles->alpha1 - 1.20394) < 1e-5);
  CHECK(std::abs(rep.angles->beta1 - 0.5969756) < 1e-5);
  REQUIRE(rep.improper_roots.size() >= 1);
  bool found = false;
  for (const auto& p : rep.improper_roots) {
    if (dist(p, reference::kImproper23.alpha1, reference::kImproper23.beta1) < 1e-6) found = true;
    CHECK_FALSE(assess_properness(rep.params, p).all());
  }
  CHECK(found);
  const Verification v = verify_point(rep.params, {reference::kImproper23.alpha1, reference::kImproper23.beta1});
  CHECK(v.det_b > 0.0);
}

TEST_CASE("all methods reach the same root") {
  for (auto [a, b] : {std::pair{2, 5}, {3, 7}, {5, 9}, {6, 12}}) {
    const auto& r = verified(a, b);
    for (auto m : {SolveMethod::FixedPoint, SolveMethod::Newton, SolveMethod::GridOracle, SolveMethod::Auto}) {
      SolverConfig c;
      c.method = m;
      if (m == SolveMethod::FixedPoint) c.tolerance = 1e-10;
      const auto rep = solve(normalize_params(a, b), c);
      CAPTURE(to_string(m));
      REQUIRE(rep.status == SolveStatus::Solved);
      CHECK(rep.method == m);
      CHECK(std::abs(rep.angles->alpha1 - r.alpha1) < 1e-8);
      CHECK(std::abs(rep.angles->beta1 - r.beta1) < 1e-8);
    }
  }
}

TEST_CASE("manual gains") {
  SolverConfig c;
  c.k1 = 20.0;
  c.k2 = 20.0;
  const auto rep = solve(normalize_params(4, 6), c);
  CHECK(rep.status == SolveStatus::Solved);
  CHECK(rep.gains.k1 == 20.0);
  CHECK(rep.gains.k2 == 20.0);
}

TEST_CASE("iteration cap without polish diverges") {
  SolverConfig c;
  c.method = SolveMethod::FixedPoint;
  c.max_iterations = 5;
  const auto rep = solve(normalize_params(3, 8), c);
  CHECK(rep.status == SolveStatus::Diverged);
  CHECK(rep.iterations == 5);
}

TEST_CASE("solve is deterministic") {
  for (auto [a, b] : {std::pair{2, 3}, {4, 9}}) {
    const auto x = solve(normalize_params(a, b));
    const auto y = solve(normalize_params(a, b));
    REQUIRE(x.angles);
    CHECK(std::memcmp(&*x.angles, &*y.angles, sizeof(DihedralAngles)) == 0);
    CHECK(std::memcmp(&x.residual_f1, &y.residual_f1, sizeof(double)) == 0);
    CHECK(x.iterations == y.iterations);
    CHECK(x.improper_roots == y.improper_roots);
    SolverConfig par;
    par.execution = Execution::Parallel;
    const auto z = solve(normalize_params(a, b), par);
    CHECK(std::memcmp(&*x.angles, &*z.angles, sizeof(DihedralAngles)) == 0);
  }
}

TEST_CASE("grid oracle") {
  const auto p29 = normalize_params(2, 9);
  CHECK(grid_oracle(p29, domain_for(p29), 200).empty());

  const auto p35 = normalize_params(3, 5);
  const auto roots = grid_oracle(p35, domain_for(p35), 200);
  REQUIRE(roots.size() == 1);
  const auto rep = solve(p35);
  CHECK(dist(roots[0], rep.angles->alpha1, rep.angles->beta1) < 1e-8);

  const auto p47 = normalize_params(4, 7);
  const auto r47 = grid_oracle(p47, domain_for(p47), 200);
  REQUIRE(r47.size() == 1);
  const auto& v = verified(4, 7);
  CHECK(dist(r47[0], v.alpha1, v.beta1) < 1e-8);

  CHECK_THROWS_AS(grid_oracle(p35, domain_for(p35), 49), InvalidParams);

  const auto s = grid_oracle(p35, domain_for(p35), 120, Execution::Serial);
  const auto q = grid_oracle(p35, domain_for(p35), 120, Execution::Parallel);
  CHECK(s == q);
}

TEST_CASE("grid oracle over the full (2,3) constraint box") {
  const auto p = normalize_params(2, 3);
  const auto roots = grid_oracle(p, constraint_box(p), 200);
  const auto proper = proper_roots(p, roots);
  REQUIRE(proper.size() == 1);
  CHECK(dist(proper[0], verified(2, 3).alpha1, verified(2, 3).beta1) < 1e-8);
  CHECK(roots.size() >= 2);
}

TEST_CASE("grid oracle uniqueness and emptiness for a <= 5") {
  for (int a = 2; a <= 5; ++a) {
    const int bmax = *compute_bmax(a);
    for (int b = a + 1; b <= bmax + 4; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(proper_oracle_roots(a, b).size() == (b <= bmax ? 1u : 0u));
    }
  }
}
