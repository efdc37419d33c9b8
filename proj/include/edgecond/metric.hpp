#pragma once

// Fixed-size 4x4 symmetric matrix algebra for projective metrics:
// determinants, minors, inverse, inertia and the distance formulas.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace edgecond {

class SymMatrix4 {
 public:
  using Array = std::array<std::array<double, 4>, 4>;

  /// Zero matrix.
  SymMatrix4() = default;

  /// Throws NotSymmetric if entries differ from their transpose by more
  /// than a rounding-level relative tolerance; otherwise stores the
  /// symmetric part.
  explicit SymMatrix4(const Array& entries);

  static SymMatrix4 identity();
  static SymMatrix4 diagonal(double d0, double d1, double d2, double d3);

  double operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const Array& entries() const { return m_; }

  /// Sets (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double value);

  double max_abs() const;

  friend bool operator==(const SymMatrix4&, const SymMatrix4&) = default;

 private:
  Array m_{};
};

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int dimension() const { return positive + negative + zero; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Row and column selection for a minor. Indices strictly increasing,
/// both lists the same nonzero length, all indices in [0, 4).
class MinorSpec {
 public:
  MinorSpec(std::vector<int> rows, std::vector<int> cols);

  /// rows = cols = {0,1,2,3} without `skip`; the principal minor B_ii.
  static MinorSpec principal_without(int skip);

  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& cols() const { return cols_; }
  std::size_t size() const { return rows_.size(); }

  /// Complementary index lists in increasing order (may be empty).
  std::vector<int> complement_rows() const;
  std::vector<int> complement_cols() const;

 private:
  std::vector<int> rows_;
  std::vector<int> cols_;
};

double determinant(const SymMatrix4& m);
double minor(const SymMatrix4& m, const MinorSpec& spec);

/// Throws SingularMatrix when |det| < 1e-12 * max_abs^4.
SymMatrix4 inverse(const SymMatrix4& m);

/// Eigenvalues in ascending order (cyclic Jacobi).
std::array<double, 4> eigenvalues(const SymMatrix4& m);

/// Eigenvalues of a symmetric n x n block, n <= 4, given row-major.
std::vector<double> symmetric_eigenvalues(std::span<const double> row_major, std::size_t n);

/// Inertia with |lambda| <= 1e-9 * max_abs counted as zero.
Signature signature(const SymMatrix4& m);

/// Inertia of the 3x3 principal submatrix with row/column `skip` removed.
Signature principal_signature(const SymMatrix4& m, int skip);

struct Lemma1Sides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Minor of `m` on `spec` against det(m) times the complementary minor of
/// inverse(m), signed by the parity of the two index permutations.
/// Throws SingularMatrix.
Lemma1Sides lemma1_check(const SymMatrix4& m, const MinorSpec& spec);

enum class Geometry { Elliptic, Hyperbolic };

/// Distance between vertices i and j read off a Gram matrix.
/// Elliptic: arccos(a_ij / sqrt(a_ii a_jj)).
/// Hyperbolic: arccosh(-a_ij / sqrt(a_ii a_jj)); i == j gives 0.
/// Throws DomainError outside the valid argument range.
double projective_distance(const SymMatrix4& gram, std::size_t i, std::size_t j, Geometry geometry);

namespace tolerances {
inline constexpr double kZeroEigenvalue = 1e-9;
inline constexpr double kSingular = 1e-12;
inline constexpr double kDistanceClamp = 1e-9;
}  // namespace tolerances

}  // namespace edgecond
