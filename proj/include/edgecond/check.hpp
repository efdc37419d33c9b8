#pragma once

// Seeded randomized check of the complementary-minor identity
//   det A[I,J] = sigma * det A * det (A^-1)[J^c, I^c]
// over symmetric 4x4 matrices.

#include <cstdint>
#include <string>
#include <vector>

#include "edgecond/metric.hpp"

namespace edgecond {

struct CheckOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  bool identity_only = false;          ///< every trial uses the identity matrix
  std::size_t singular_injections = 0;  ///< first n trials use a rank-deficient matrix
  double relative_tolerance = 1e-9;
};

struct CheckFailure {
  std::size_t trial = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CheckSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;  ///< singular matrices
  std::vector<CheckFailure> failures;
  double worst_relative_error = 0.0;

  bool ok() const { return failed == 0; }
};

/// Random symmetric matrix with entries uniform in [-1, 1].
SymMatrix4 random_symmetric(std::uint64_t seed);

/// Throws InvalidParams when trials is zero.
CheckSummary run_lemma1_suite(const CheckOptions& options);

}  // namespace edgecond
