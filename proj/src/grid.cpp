#include "edgecond/grid.hpp"

#include "edgecond/edge_conditions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace edgecond {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

double GridSpec::alpha_at(std::size_t i) const {
  if (alpha_count < 2) return box.alpha1_lo;
  if (i + 1 == alpha_count) return box.alpha1_hi;
  return box.alpha1_lo + box.alpha_width() * static_cast<double>(i) /
                             static_cast<double>(alpha_count - 1);
}

double GridSpec::beta_at(std::size_t j) const {
  if (beta_count < 2) return box.beta1_lo;
  if (j + 1 == beta_count) return box.beta1_hi;
  return box.beta1_lo + box.beta_width() * static_cast<double>(j) /
                            static_cast<double>(beta_count - 1);
}

std::vector<EdgeSample> sample_edge_system(const SimplexParams& params, const GridSpec& grid,
                                           Execution exec) {
  std::vector<EdgeSample> out(grid.size());
  for_each_node(grid, exec, [&](std::size_t i, std::size_t j) {
    const AngleSlice s{grid.alpha_at(i), grid.beta_at(j), params};
    const DihedralAngles g = s.angles();
    out[j * grid.alpha_count + i] = {s.alpha1, s.beta1, f1(g), f2(g), d1(g), d2(g)};
  });
  return out;
}

ResidualField sample_residuals(const SimplexParams& params, const GridSpec& grid, Execution exec) {
  ResidualField out{std::vector<double>(grid.size()), std::vector<double>(grid.size())};
  for_each_node(grid, exec, [&](std::size_t i, std::size_t j) {
    const DihedralAngles g = AngleSlice{grid.alpha_at(i), grid.beta_at(j), params}.angles();
    const std::size_t k = j * grid.alpha_count + i;
    out.f1[k] = f1(g);
    out.f2[k] = f2(g);
  });
  return out;
}

}  // namespace edgecond
