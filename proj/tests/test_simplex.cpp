#include <doctest.h>

#include <cmath>
#include <numbers>

#include "edgecond/edge_conditions.hpp"
#include "edgecond/errors.hpp"
#include "edgecond/simplex.hpp"
#include "reference.hpp"

using namespace edgecond;
using std::numbers::pi;

namespace {

SymMatrix4 matrix_at(int a, int b, double alpha1, double beta1) {
  return build_coxeter_schlafli(angles_from_reduced(normalize_params(a, b), alpha1, beta1));
}

}  // namespace

TEST_CASE("normalize_params") {
  CHECK(normalize_params(3, 5) == SimplexParams{3, 5, false});
  CHECK(normalize_params(5, 3) == SimplexParams{3, 5, true});
  CHECK(normalize_params(4, 4) == SimplexParams{4, 4, false});
  CHECK_THROWS_AS(normalize_params(0, 3), InvalidParams);
  CHECK_THROWS_AS(normalize_params(3, 0), InvalidParams);
  CHECK_THROWS_AS(normalize_params(-1, 3), InvalidParams);
}

TEST_CASE("angle constraints") {
  const auto p = normalize_params(3, 7);
  const DihedralAngles g = angles_from_reduced(p, 0.9, 0.1);
  CHECK(2 * g.alpha1 + g.alpha2 == doctest::Approx(2 * pi / 3));
  CHECK(2 * g.beta1 + g.beta2 == doctest::Approx(2 * pi / 7));
  CHECK(satisfies_constraints(g, p));
  CHECK_FALSE(satisfies_constraints(angles_from_reduced(p, 1.5, 0.1), p));  // alpha2 < 0
  DihedralAngles off = g;
  off.alpha2 += 1e-9;
  CHECK_FALSE(satisfies_constraints(off, p));
}

TEST_CASE("build_coxeter_schlafli") {
  const double h = pi / 2;
  const SymMatrix4 id = build_coxeter_schlafli({h, h, h, h});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(id(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));

  const double t = pi / 3;
  const SymMatrix4 m = build_coxeter_schlafli({t, t, t, t});
  for (std::size_t i = 0; i < 4; ++i) CHECK(m(i, i) == 1.0);
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) {
    CHECK(m(i, j) == doctest::Approx(-0.5));
  }

  const DihedralAngles g{0.1, 0.2, 0.3, 0.4};
  const SymMatrix4 p = build_coxeter_schlafli(g);
  CHECK(p(0, 1) == -std::cos(g.beta1));
  CHECK(p(0, 2) == -std::cos(g.beta2));
  CHECK(p(0, 3) == -std::cos(g.alpha1));
  CHECK(p(1, 2) == -std::cos(g.alpha1));
  CHECK(p(1, 3) == -std::cos(g.alpha2));
  CHECK(p(2, 3) == -std::cos(g.beta1));

  const SymMatrix4 t25 = matrix_at(2, 5, 1.422264, 0.218217);
  CHECK(determinant(t25) < 0.0);
  CHECK(signature(t25) == Signature{3, 1, 0});
}

TEST_CASE("classify_vertex") {
  for (int i = 0; i < 4; ++i) CHECK(classify_vertex(SymMatrix4::identity(), i) == VertexClass::Proper);

  SymMatrix4 ideal = SymMatrix4::identity();
  ideal.set(3, 3, 0.0);
  CHECK(classify_vertex(ideal, 0) == VertexClass::Ideal);

  const SymMatrix4 b24 = matrix_at(2, 4, 1.332343, 0.3618578);
  for (int i = 0; i < 4; ++i) CHECK(classify_vertex(b24, i) == VertexClass::Outer);

  CHECK_THROWS_AS(classify_vertex(SymMatrix4::diagonal(-1, -1, -1, 1), 3), AmbiguousSignature);
}

TEST_CASE("classify_realization") {
  CHECK(classify_realization(normalize_params(1, 6)) == RealizationClass::Spherical);
  CHECK(classify_realization(normalize_params(1, 1)) == RealizationClass::Spherical);
  CHECK(classify_realization(normalize_params(2, 2)) == RealizationClass::HyperbolicIdeal);
  CHECK(classify_realization(normalize_params(3, 3)) == RealizationClass::ExcludedSymmetric);
  CHECK(classify_realization(normalize_params(2, 8)) == RealizationClass::NoProperSolution);
  CHECK(classify_realization(normalize_params(3, 9)) == RealizationClass::NoProperSolution);
  CHECK(classify_realization(normalize_params(2, 3)) == RealizationClass::HyperbolicOuter);
}

TEST_CASE("HyperbolicOuter exactly below b_max") {
  for (int a = 2; a <= 12; ++a) {
    const int bmax = *compute_bmax(a);
    for (int b = a + 1; b <= 3 * a; ++b) {
      const bool outer = classify_realization(normalize_params(a, b)) == RealizationClass::HyperbolicOuter;
      CHECK_MESSAGE(outer == (b <= bmax), "a=" << a << " b=" << b);
    }
  }
}

TEST_CASE("classification is invariant under the duality swap") {
  for (int a = 1; a <= 14; ++a) {
    for (int b = 1; b <= 14; ++b) {
      CHECK(classify_realization(normalize_params(a, b)) == classify_realization(normalize_params(b, a)));
    }
  }
}

TEST_CASE("gram_sign_check") {
  CHECK_FALSE(gram_sign_check(SymMatrix4::identity()));
  for (const auto& r : {reference::kVerifiedRoots.front(), reference::kVerifiedRoots[1], reference::kVerifiedRoots.back()}) {
    CHECK(gram_sign_check(inverse(matrix_at(r.a, r.b, r.alpha1, r.beta1))));
  }
  CHECK(gram_sign_check(inverse(matrix_at(6, 12, 0.5119572, 0.02248575))));
}

TEST_CASE("Coxeter-Schlafli matrices are symmetric with unit diagonal") {
  for (double a1 = 0.0; a1 <= pi; a1 += 0.37) {
    for (double b1 = 0.0; b1 <= pi; b1 += 0.41) {
      const SymMatrix4 m = build_coxeter_schlafli({a1, pi - a1, b1, 0.5 * b1});
      for (std::size_t i = 0; i < 4; ++i) {
        CHECK(m(i, i) == 1.0);
        for (std::size_t j = 0; j < 4; ++j) {
          CHECK(m(i, j) == m(j, i));
          CHECK(std::abs(m(i, j)) <= 1.0);
        }
      }
    }
  }
}

TEST_CASE("verified roots are hyperbolic simplices with outer vertices") {
  for (const auto& r : reference::kVerifiedRoots) {
    const SymMatrix4 b = matrix_at(r.a, r.b, r.alpha1, r.beta1);
    CHECK(determinant(b) < 0.0);
    CHECK(signature(b) == Signature{3, 1, 0});
    for (int i = 0; i < 4; ++i) CHECK(classify_vertex(b, i) == VertexClass::Outer);
    CHECK(gram_sign_check(inverse(b)));
  }
}
