// Command-line front end: classify, solve, table, grid, check.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fmt/format.h>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "edgecond/check.hpp"
#include "edgecond/domain.hpp"
#include "edgecond/edge_conditions.hpp"
#include "edgecond/errors.hpp"
#include "edgecond/grid.hpp"
#include "edgecond/record.hpp"
#include "edgecond/solver.hpp"

namespace {

using namespace edgecond;

int code(ExitCode c) { return static_cast<int>(c); }

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// "3" or "2..6".
IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidParams(fmt::format("bad range '{}'", text));
  }
}

struct SolverFlags {
  double tol = SolverConfig{}.tolerance;
  double angle_tol = SolverConfig{}.angle_tolerance;
  int max_iter = SolverConfig{}.max_iterations;
  std::optional<double> k1;
  std::optional<double> k2;
  std::string method = "auto";
  std::size_t resolution = SolverConfig{}.oracle_resolution;

  void attach(CLI::App& cmd) {
    cmd.add_option("--tol", tol, "Residual tolerance on max(|f1|, |f2|)");
    cmd.add_option("--angle-tol", angle_tol, "Fixed-point displacement tolerance");
    cmd.add_option("--max-iter", max_iter, "Fixed-point iteration cap");
    cmd.add_option("--k1", k1, "Manual gain for the alpha1 update");
    cmd.add_option("--k2", k2, "Manual gain for the beta1 update");
    cmd.add_option("--method", method, "fixed | newton | oracle | auto")
        ->check(CLI::IsMember({"fixed", "newton", "oracle", "auto"}));
    cmd.add_option("--resolution", resolution, "Lattice resolution for the oracle and gain estimate");
  }

  SolverConfig config(Execution exec) const {
    SolverConfig c;
    c.tolerance = tol;
    c.angle_tolerance = angle_tol;
    c.max_iterations = max_iter;
    c.k1 = k1;
    c.k2 = k2;
    c.method = *parse_solve_method(method);
    c.oracle_resolution = resolution;
    c.contraction_resolution = resolution;
    c.execution = exec;
    return c;
  }
};

struct OutputFlags {
  std::string format = "csv";
  bool degrees = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("--format", format, "csv | json-lines")->check(CLI::IsMember({"csv", "json-lines"}));
    cmd.add_flag("--degrees", degrees, "Report angles in degrees");
  }

  RecordStyle style() const { return {*parse_output_format(format), degrees}; }
};

void emit(const std::vector<OutputRecord>& records, const RecordStyle& style) {
  if (style.format == OutputFormat::Csv) std::cout << csv_header() << '\n';
  for (const auto& r : records) std::cout << format_record(r, style) << '\n';
  std::cout.flush();
}

bool solvable(RealizationClass c) { return c == RealizationClass::HyperbolicOuter; }

int run_classify(int a, int b, const OutputFlags& out) {
  emit({classify_record(normalize_params(a, b))}, out.style());
  return code(ExitCode::Ok);
}

int run_solve(int a, int b, const SolverFlags& sf, const OutputFlags& out) {
  const SimplexParams params = normalize_params(a, b);
  const RealizationClass cls = classify_realization(params);
  if (cls != RealizationClass::HyperbolicOuter && cls != RealizationClass::NoProperSolution) {
    emit({classify_record(params)}, out.style());
    fmt::print(stderr, "({}, {}) is {}; there is no edge-condition system to solve\n", params.a, params.b,
               to_string(cls));
    return code(ExitCode::InvalidInput);
  }
  const SolveReport rep = solve(params, sf.config(Execution::Serial));
  emit({solve_record(rep)}, out.style());
  fmt::print(stderr, "status {} method {} residual {:.3g} iterations {}+{} gains ({:.6g}, {:.6g})\n",
             to_string(rep.status), to_string(rep.method), rep.max_residual(), rep.iterations,
             rep.polish_iterations, rep.gains.k1, rep.gains.k2);
  for (const auto& p : rep.improper_roots) {
    fmt::print(stderr, "rejected root ({:.10g}, {:.10g})\n", p.alpha1, p.beta1);
  }
  return code(exit_code_for(rep.status));
}

int run_table(const std::string& a_text, const std::string& b_text, const std::string& b_upto,
              const SolverFlags& sf, const OutputFlags& out) {
  if (!b_text.empty() == !b_upto.empty()) throw InvalidParams("give exactly one of --b and --b-upto");
  const IntRange ar = parse_range(a_text);
  if (ar.lo < 1 || ar.hi < ar.lo) throw InvalidParams(fmt::format("empty a range '{}'", a_text));

  std::vector<std::pair<int, int>> cells;
  if (!b_text.empty()) {
    const IntRange br = parse_range(b_text);
    if (br.lo < 1 || br.hi < br.lo) throw InvalidParams(fmt::format("empty b range '{}'", b_text));
    for (int a = ar.lo; a <= ar.hi; ++a) {
      for (int b = std::max(br.lo, a + 1); b <= br.hi; ++b) cells.emplace_back(a, b);
    }
  } else {
    for (int a = ar.lo; a <= ar.hi; ++a) {
      int hi = 0;
      if (b_upto == "bmax") {
        if (a < 2) throw InvalidParams("--b-upto bmax needs a >= 2");
        const auto bm = compute_bmax(a);
        if (!bm) throw InvalidParams(fmt::format("no finite b_max for a = {}", a));
        hi = *bm;
      } else {
        hi = parse_range(b_upto).hi;
      }
      for (int b = a + 1; b <= hi; ++b) cells.emplace_back(a, b);
    }
  }
  if (cells.empty()) throw InvalidParams("the ranges contain no pair with b > a");

  // Cells are solved concurrently with serial kernels inside; results land
  // in fixed slots so the output order is (a, b) regardless of timing.
  const SolverConfig cfg = sf.config(Execution::Serial);
  std::vector<OutputRecord> records(cells.size());
  std::vector<std::string> errors(cells.size());
  bool diverged = false;
  const auto n = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic) reduction(|| : diverged)
  for (long k = 0; k < n; ++k) {
    const auto [a, b] = cells[static_cast<std::size_t>(k)];
    const SimplexParams params = normalize_params(a, b);
    try {
      if (solvable(classify_realization(params))) {
        const SolveReport rep = solve(params, cfg);
        records[static_cast<std::size_t>(k)] = solve_record(rep);
        diverged = diverged || rep.status == SolveStatus::Diverged;
      } else {
        records[static_cast<std::size_t>(k)] = classify_record(params);
      }
    } catch (const std::exception& e) {
      records[static_cast<std::size_t>(k)] = classify_record(params);
      errors[static_cast<std::size_t>(k)] = e.what();
      diverged = true;
    }
  }
  emit(records, out.style());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (!errors[k].empty()) fmt::print(stderr, "({}, {}): {}\n", cells[k].first, cells[k].second, errors[k]);
  }
  return code(diverged ? ExitCode::Diverged : ExitCode::Ok);
}

int run_grid(int a, int b, std::size_t resolution) {
  if (resolution < 2) throw InvalidParams("grid resolution must be at least 2");
  const SimplexParams params = normalize_params(a, b);
  const GridSpec grid{domain_for(params), resolution, resolution};
  const auto samples = sample_edge_system(params, grid, Execution::Parallel);
  std::string buf = grid_csv_header() + '\n';
  for (const auto& s : samples) {
    buf += format_grid_row(s);
    buf += '\n';
  }
  std::cout << buf;
  std::cout.flush();
  return code(ExitCode::Ok);
}

int run_check(const CheckOptions& opt) {
  const CheckSummary s = run_lemma1_suite(opt);
  fmt::print("trials {} passed {} failed {} skipped {} worst_relative_error {:.3g}\n", opt.trials, s.passed,
             s.failed, s.skipped, s.worst_relative_error);
  if (s.skipped > 0) fmt::print(stderr, "{} singular matrices skipped (SingularMatrix)\n", s.skipped);
  for (const auto& f : s.failures) {
    fmt::print(stderr, "trial {}: lhs {:.17g} rhs {:.17g}\n", f.trial, f.lhs, f.rhs);
  }
  return code(s.ok() ? ExitCode::Ok : ExitCode::CheckFailure);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-condition solver for the F12 fundamental simplex"};
  app.require_subcommand(1);

  int a = 0, b = 0;
  OutputFlags classify_out, solve_out, table_out;
  SolverFlags solve_flags, table_flags;

  auto* classify = app.add_subcommand("classify", "Realization class, b_max and the inequality sides");
  classify->add_option("a", a)->required();
  classify->add_option("b", b)->required();
  classify_out.attach(*classify);

  auto* solve_cmd = app.add_subcommand("solve", "Solve the edge conditions and verify the simplex");
  solve_cmd->add_option("a", a)->required();
  solve_cmd->add_option("b", b)->required();
  solve_flags.attach(*solve_cmd);
  solve_out.attach(*solve_cmd);

  std::string a_range, b_range, b_upto;
  auto* table = app.add_subcommand("table", "Solve every pair b > a in the given ranges");
  table->add_option("--a", a_range, "a range, e.g. 2..6")->required();
  table->add_option("--b", b_range, "b range, e.g. 3..12");
  table->add_option("--b-upto", b_upto, "upper b per row: an integer or 'bmax'");
  table_flags.attach(*table);
  table_out.attach(*table);

  std::size_t grid_resolution = 100;
  auto* grid = app.add_subcommand("grid", "CSV of f1, f2, d1, d2 over the search domain");
  grid->add_option("a", a)->required();
  grid->add_option("b", b)->required();
  grid->add_option("--resolution", grid_resolution, "Nodes per axis");

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "Randomized complementary-minor identity check");
  check->add_option("--trials", check_opt.trials, "Number of random matrices");
  check->add_option("--seed", check_opt.seed, "RNG seed");
  check->add_flag("--identity", check_opt.identity_only, "Use the identity matrix in every trial");
  check->add_option("--inject-singular", check_opt.singular_injections,
                    "Replace the first N matrices with singular ones");
  check->add_option("--rel-tol", check_opt.relative_tolerance, "Relative tolerance per trial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return code(ExitCode::InvalidInput);
  }

  try {
    if (*classify) return run_classify(a, b, classify_out);
    if (*solve_cmd) return run_solve(a, b, solve_flags, solve_out);
    if (*table) return run_table(a_range, b_range, b_upto, table_flags, table_out);
    if (*grid) return run_grid(a, b, grid_resolution);
    if (*check) return run_check(check_opt);
  } catch (const InvalidParams& e) {
    fmt::print(stderr, "invalid input: {}\n", e.what());
    return code(ExitCode::InvalidInput);
  } catch (const InvalidClass& e) {
    fmt::print(stderr, "{}\n", e.what());
    return code(ExitCode::InvalidInput);
  } catch (const NoContraction& e) {
    fmt::print(stderr, "no contraction: {}\n", e.what());
    return code(ExitCode::Diverged);
  } catch (const Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return code(ExitCode::Diverged);
  }
  return code(ExitCode::InvalidInput);
}
