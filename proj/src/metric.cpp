#include "edgecond/metric.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "edgecond/errors.hpp"

namespace edgecond {

namespace {

constexpr std::size_t kDim = 4;

// Laplace expansion along the first row of an n x n block (n <= 4) stored
// row-major with stride n.
double block_determinant(const double* a, std::size_t n) {
  if (n == 0) return 1.0;
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  double sub[9];
  double sum = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t k = 0;
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) sub[k++] = a[r * n + c];
      }
    }
    const double cofactor = block_determinant(sub, n - 1);
    sum += ((col % 2 == 0) ? 1.0 : -1.0) * a[col] * cofactor;
  }
  return sum;
}

double select_determinant(const SymMatrix4::Array& m, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
  const std::size_t n = rows.size();
  double block[16];
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      block[r * n + c] = m[static_cast<std::size_t>(rows[r])][static_cast<std::size_t>(cols[c])];
    }
  }
  return block_determinant(block, n);
}

std::vector<int> complement_of(const std::vector<int>& idx) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(kDim); ++i) {
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) out.push_back(i);
  }
  return out;
}

// Sign of the permutation (selected..., complement...) of 0..3.
int permutation_sign(const std::vector<int>& head, const std::vector<int>& tail) {
  std::vector<int> perm(head);
  perm.insert(perm.end(), tail.begin(), tail.end());
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

void validate_indices(const std::vector<int>& idx, const char* which) {
  if (idx.empty() || idx.size() > kDim) {
    throw InvalidMinorSpec(fmt::format("minor {} must hold 1..4 indices", which));
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= static_cast<int>(kDim)) {
      throw InvalidMinorSpec(fmt::format("minor {} index {} out of range", which, idx[i]));
    }
    if (i > 0 && idx[i] <= idx[i - 1]) {
      throw InvalidMinorSpec(fmt::format("minor {} indices must be strictly increasing", which));
    }
  }
}

Signature count_inertia(const std::vector<double>& eig, double scale) {
  const double zero_tol = tolerances::kZeroEigenvalue * scale;
  Signature s;
  for (double lambda : eig) {
    if (std::abs(lambda) <= zero_tol) {
      ++s.zero;
    } else if (lambda > 0) {
      ++s.positive;
    } else {
      ++s.negative;
    }
  }
  return s;
}

}  // namespace

SymMatrix4::SymMatrix4(const Array& entries) {
  double scale = 0.0;
  for (const auto& row : entries) {
    for (double v : row) scale = std::max(scale, std::abs(v));
  }
  const double tol = 1e-12 * std::max(scale, 1.0);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i; j < kDim; ++j) {
      if (std::abs(entries[i][j] - entries[j][i]) > tol) {
        throw NotSymmetric(fmt::format("entry ({},{}) = {} differs from ({},{}) = {}", i, j,
                                       entries[i][j], j, i, entries[j][i]));
      }
      const double v = 0.5 * (entries[i][j] + entries[j][i]);
      m_[i][j] = v;
      m_[j][i] = v;
    }
  }
}

SymMatrix4 SymMatrix4::identity() { return diagonal(1.0, 1.0, 1.0, 1.0); }

SymMatrix4 SymMatrix4::diagonal(double d0, double d1, double d2, double d3) {
  SymMatrix4 m;
  m.m_[0][0] = d0;
  m.m_[1][1] = d1;
  m.m_[2][2] = d2;
  m.m_[3][3] = d3;
  return m;
}

void SymMatrix4::set(std::size_t i, std::size_t j, double value) {
  m_[i][j] = value;
  m_[j][i] = value;
}

double SymMatrix4::max_abs() const {
  double s = 0.0;
  for (const auto& row : m_) {
    for (double v : row) s = std::max(s, std::abs(v));
  }
  return s;
}

MinorSpec::MinorSpec(std::vector<int> rows, std::vector<int> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  validate_indices(rows_, "rows");
  validate_indices(cols_, "cols");
  if (rows_.size() != cols_.size()) {
    throw InvalidMinorSpec("minor rows and cols differ in length");
  }
}

MinorSpec MinorSpec::principal_without(int skip) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(kDim); ++i) {
    if (i != skip) idx.push_back(i);
  }
  return MinorSpec(idx, idx);
}

std::vector<int> MinorSpec::complement_rows() const { return complement_of(rows_); }
std::vector<int> MinorSpec::complement_cols() const { return complement_of(cols_); }

double determinant(const SymMatrix4& m) {
  // Expansion by complementary 2x2 minors of the top and bottom row pairs.
  const auto& a = m.entries();
  const double s0 = a[0][0] * a[1][1] - a[1][0] * a[0][1];
  const double s1 = a[0][0] * a[1][2] - a[1][0] * a[0][2];
  const double s2 = a[0][0] * a[1][3] - a[1][0] * a[0][3];
  const double s3 = a[0][1] * a[1][2] - a[1][1] * a[0][2];
  const double s4 = a[0][1] * a[1][3] - a[1][1] * a[0][3];
  const double s5 = a[0][2] * a[1][3] - a[1][2] * a[0][3];
  const double c5 = a[2][2] * a[3][3] - a[3][2] * a[2][3];
  const double c4 = a[2][1] * a[3][3] - a[3][1] * a[2][3];
  const double c3 = a[2][1] * a[3][2] - a[3][1] * a[2][2];
  const double c2 = a[2][0] * a[3][3] - a[3][0] * a[2][3];
  const double c1 = a[2][0] * a[3][2] - a[3][0] * a[2][2];
  const double c0 = a[2][0] * a[3][1] - a[3][0] * a[2][1];
  return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;
}

double minor(const SymMatrix4& m, const MinorSpec& spec) {
  return select_determinant(m.entries(), spec.rows(), spec.cols());
}

SymMatrix4 inverse(const SymMatrix4& m) {
  const double det = determinant(m);
  const double scale = m.max_abs();
  const double threshold = tolerances::kSingular * scale * scale * scale * scale;
  if (!(std::abs(det) >= threshold) || det == 0.0) {
    throw SingularMatrix(fmt::format("determinant {} below threshold {}", det, threshold));
  }
  SymMatrix4 inv;
  for (int i = 0; i < static_cast<int>(kDim); ++i) {
    for (int j = i; j < static_cast<int>(kDim); ++j) {
      // inv(i,j) = cofactor(j,i) / det; the matrix is symmetric.
      MinorSpec cof = MinorSpec(complement_of({j}), complement_of({i}));
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      inv.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), sign * minor(m, cof) / det);
    }
  }
  return inv;
}

std::vector<double> symmetric_eigenvalues(std::span<const double> row_major, std::size_t n) {
  std::array<double, 16> a{};
  std::copy(row_major.begin(), row_major.begin() + static_cast<std::ptrdiff_t>(n * n), a.begin());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  // Cyclic Jacobi sweeps until the off-diagonal mass vanishes.
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    double diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      diag += at(i, i) * at(i, i);
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    }
    if (off == 0.0 || off <= 1e-32 * diag) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::array<double, 4> eigenvalues(const SymMatrix4& m) {
  std::array<double, 16> flat{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) flat[i * kDim + j] = m(i, j);
  }
  const auto eig = symmetric_eigenvalues(flat, kDim);
  return {eig[0], eig[1], eig[2], eig[3]};
}

Signature signature(const SymMatrix4& m) {
  const auto eig = eigenvalues(m);
  return count_inertia({eig.begin(), eig.end()}, m.max_abs());
}

Signature principal_signature(const SymMatrix4& m, int skip) {
  if (skip < 0 || skip >= static_cast<int>(kDim)) {
    throw InvalidMinorSpec(fmt::format("vertex index {} out of range", skip));
  }
  std::array<double, 9> flat{};
  double scale = 0.0;
  std::size_t r = 0;
  for (std::size_t i = 0; i < kDim; ++i) {
    if (static_cast<int>(i) == skip) continue;
    std::size_t c = 0;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (static_cast<int>(j) == skip) continue;
      flat[r * 3 + c] = m(i, j);
      scale = std::max(scale, std::abs(m(i, j)));
      ++c;
    }
    ++r;
  }
  return count_inertia(symmetric_eigenvalues(flat, 3), scale);
}

Lemma1Sides lemma1_check(const SymMatrix4& m, const MinorSpec& spec) {
  const SymMatrix4 inv = inverse(m);
  const auto rows_c = spec.complement_rows();
  const auto cols_c = spec.complement_cols();
  const int sigma = permutation_sign(spec.rows(), rows_c) * permutation_sign(spec.cols(), cols_c);
  Lemma1Sides out;
  out.lhs = minor(m, spec);
  // Rows of the inverse index the columns of m, hence the swap.
  out.rhs = determinant(m) * select_determinant(inv.entries(), cols_c, rows_c) * sigma;
  return out;
}

double projective_distance(const SymMatrix4& gram, std::size_t i, std::size_t j, Geometry geometry) {
  if (i >= kDim || j >= kDim) {
    throw DomainError(fmt::format("vertex index ({}, {}) out of range", i, j));
  }
  const double tol = tolerances::kDistanceClamp;
  const double norm2 = gram(i, i) * gram(j, j);
  if (!(norm2 > 0.0)) {
    throw DomainError(fmt::format("a_{}{} * a_{}{} = {} is not positive", i, i, j, j, norm2));
  }
  if (i == j) return 0.0;
  const double norm = std::sqrt(norm2);

  if (geometry == Geometry::Hyperbolic) {
    const double arg = -gram(i, j) / norm;
    if (arg < 1.0 - tol || !std::isfinite(arg)) {
      throw DomainError(fmt::format("arccosh argument {} below 1", arg));
    }
    return std::acosh(std::max(arg, 1.0));
  }
  const double arg = gram(i, j) / norm;
  if (arg < -1.0 - tol || arg > 1.0 + tol || !std::isfinite(arg)) {
    throw DomainError(fmt::format("arccos argument {} outside [-1, 1]", arg));
  }
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

}  // namespace edgecond
