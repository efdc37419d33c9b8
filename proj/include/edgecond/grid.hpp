#pragma once

// Lattice evaluation kernels. Every kernel takes an Execution argument:
// Serial is the reference path, Parallel distributes nodes over OpenMP
// threads. Both write each node's result to a fixed slot, so the outputs
// are bitwise identical.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "edgecond/domain.hpp"

namespace edgecond {

enum class Execution { Serial, Parallel };

/// Number of OpenMP threads a Parallel kernel would use (1 without OpenMP).
int max_threads();

/// Nodes of a rectangular lattice spanning a box, corners included.
/// Node (i, j) has alpha index i and beta index j; flat index j * alpha_count + i.
struct GridSpec {
  DomainBox box;
  std::size_t alpha_count = 2;
  std::size_t beta_count = 2;

  double alpha_at(std::size_t i) const;
  double beta_at(std::size_t j) const;
  std::size_t size() const { return alpha_count * beta_count; }
};

template <class Fn>
void for_each_node(const GridSpec& grid, Execution exec, Fn&& fn) {
  const auto total = static_cast<std::int64_t>(grid.size());
  const auto nx = static_cast<std::int64_t>(grid.alpha_count);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < total; ++k) {
      fn(static_cast<std::size_t>(k % nx), static_cast<std::size_t>(k / nx));
    }
  } else {
    for (std::int64_t k = 0; k < total; ++k) {
      fn(static_cast<std::size_t>(k % nx), static_cast<std::size_t>(k / nx));
    }
  }
}

struct EdgeSample {
  double alpha1 = 0.0;
  double beta1 = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// f1, f2, d1, d2 at every lattice node, flat index order.
std::vector<EdgeSample> sample_edge_system(const SimplexParams& params, const GridSpec& grid,
                                           Execution exec);

/// f1 and f2 only; the hot loop of the root-finding oracle.
struct ResidualField {
  std::vector<double> f1;
  std::vector<double> f2;
};

ResidualField sample_residuals(const SimplexParams& params, const GridSpec& grid, Execution exec);

}  // namespace edgecond
