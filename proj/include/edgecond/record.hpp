#pragma once

// Flat output records for the command-line front end, serialized as CSV or
// JSON lines with a fixed field order and 17 significant digits.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "edgecond/edge_conditions.hpp"
#include "edgecond/grid.hpp"
#include "edgecond/solver.hpp"

namespace edgecond {

enum class OutputFormat { Csv, JsonLines };

std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> parse_output_format(std::string_view name);

struct OutputRecord {
  int a = 0;
  int b = 0;
  bool swapped = false;
  RealizationClass realization = RealizationClass::NoProperSolution;
  std::optional<SolveStatus> status;
  std::optional<int> b_max;  ///< empty for a < 2
  std::optional<Inequality> inequality;
  std::optional<DihedralAngles> angles;  ///< radians
  std::optional<std::array<double, 2>> residuals;
  std::optional<double> det_b;
  std::optional<Signature> signature;
  std::optional<std::array<std::optional<VertexClass>, 4>> vertex_classes;
  /// d(A0A1), d(A0A2), d(A0A3), d(A1A3)
  std::optional<std::array<double, 4>> edge_lengths;
  std::optional<int> iterations;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Classification fields only: class, b_max and the inequality sides.
OutputRecord classify_record(const SimplexParams& params);

/// classify_record plus everything the solver produced.
OutputRecord solve_record(const SolveReport& report);

struct RecordStyle {
  OutputFormat format = OutputFormat::Csv;
  bool degrees = false;  ///< scales the four angles only
};

std::string csv_header();
std::string format_record(const OutputRecord& rec, const RecordStyle& style);

/// Inverse of format_record; angles come back in the unit they were written
/// in. Throws InvalidParams on malformed input.
OutputRecord parse_csv_record(std::string_view line);
OutputRecord parse_json_record(std::string_view line);

std::string grid_csv_header();
std::string format_grid_row(const EdgeSample& s);

/// Process exit codes.
enum class ExitCode : int {
  Ok = 0,
  NoSolution = 1,
  InvalidInput = 2,
  Diverged = 3,
  CheckFailure = 4,
};

ExitCode exit_code_for(SolveStatus s);

}  // namespace edgecond
