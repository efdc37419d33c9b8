#include "edgecond/check.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "edgecond/errors.hpp"

namespace edgecond {

namespace {

SymMatrix4 draw_symmetric(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  SymMatrix4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) m.set(i, j, entry(rng));
  }
  return m;
}

// Row/column 3 duplicates row/column 0.
SymMatrix4 rank_deficient(std::mt19937_64& rng) {
  SymMatrix4 m = draw_symmetric(rng);
  for (std::size_t j = 0; j < 3; ++j) m.set(3, j, m(0, j));
  m.set(3, 3, m(0, 0));
  return m;
}

std::vector<int> draw_indices(std::mt19937_64& rng, std::size_t k) {
  std::vector<int> all{0, 1, 2, 3};
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

MinorSpec draw_spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 4);
  const std::size_t k = size(rng);
  auto rows = draw_indices(rng, k);
  auto cols = draw_indices(rng, k);
  return MinorSpec(std::move(rows), std::move(cols));
}

}  // namespace

SymMatrix4 random_symmetric(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return draw_symmetric(rng);
}

CheckSummary run_lemma1_suite(const CheckOptions& opt) {
  if (opt.trials == 0) throw InvalidParams("trials must be at least 1");
  std::mt19937_64 rng(opt.seed);
  CheckSummary out;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    SymMatrix4 m;
    if (opt.identity_only) {
      m = SymMatrix4::identity();
    } else if (t < opt.singular_injections) {
      m = rank_deficient(rng);
    } else {
      m = draw_symmetric(rng);
    }
    const MinorSpec spec = draw_spec(rng);
    Lemma1Sides sides;
    try {
      sides = lemma1_check(m, spec);
    } catch (const SingularMatrix&) {
      ++out.skipped;
      continue;
    }
    // A k x k minor of a matrix with entries up to s is naturally of size s^k.
    const double natural = std::pow(m.max_abs(), static_cast<double>(spec.size()));
    const double scale = std::max({std::abs(sides.lhs), std::abs(sides.rhs), natural});
    const double rel = std::abs(sides.lhs - sides.rhs) / scale;
    out.worst_relative_error = std::max(out.worst_relative_error, rel);
    if (rel <= opt.relative_tolerance) {
      ++out.passed;
    } else {
      ++out.failed;
      out.failures.push_back({t, sides.lhs, sides.rhs});
    }
  }
  return out;
}

}  // namespace edgecond
