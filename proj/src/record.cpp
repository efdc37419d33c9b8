#include "edgecond/record.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <json.hpp>
#include <numbers>
#include <vector>

#include "edgecond/errors.hpp"

namespace edgecond {

namespace {

constexpr std::array<std::string_view, 23> kColumns = {
    "a",        "b",           "swapped",     "class",      "status",         "b_max",
    "ineq_lhs", "ineq_rhs",    "angle_unit",  "alpha1",     "alpha2",         "beta1",
    "beta2",    "residual_f1", "residual_f2", "det_B",      "signature",      "vertex_classes",
    "d01",      "d02",         "d03",         "d13",        "iterations"};

// One serialized field: nullopt is an empty CSV cell / JSON null.
struct Field {
  std::optional<std::string> text;
  bool quoted = false;  // JSON string
};

std::string real(double v) { return fmt::format("{:.17g}", v); }

Field num(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return {};
  return {real(*v)};
}
Field integer(std::optional<int> v) {
  if (!v) return {};
  return {fmt::format("{}", *v)};
}
Field str(std::optional<std::string_view> v) {
  if (!v) return {};
  return {std::string(*v), true};
}

std::string signature_text(const Signature& s) {
  return fmt::format("{}/{}/{}", s.positive, s.negative, s.zero);
}

std::string vertex_text(const std::array<std::optional<VertexClass>, 4>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += '|';
    out += v[i] ? std::string(to_string(*v[i])) : std::string("Ambiguous");
  }
  return out;
}

std::vector<Field> fields(const OutputRecord& r, bool degrees) {
  const double scale = degrees ? 180.0 / std::numbers::pi : 1.0;
  auto angle = [&](double DihedralAngles::*m) -> Field {
    if (!r.angles) return {};
    return num((*r.angles).*m * scale);
  };
  auto opt_str = [](bool has, const std::string& s) { return has ? str(s) : Field{}; };
  std::vector<Field> f;
  f.push_back(integer(r.a));
  f.push_back(integer(r.b));
  f.push_back({std::string(r.swapped ? "true" : "false")});
  f.push_back(str(to_string(r.realization)));
  f.push_back(r.status ? str(to_string(*r.status)) : Field{});
  f.push_back(integer(r.b_max));
  f.push_back(r.inequality ? num(r.inequality->lhs) : Field{});
  f.push_back(r.inequality ? num(r.inequality->rhs) : Field{});
  f.push_back(str(degrees ? "deg" : "rad"));
  f.push_back(angle(&DihedralAngles::alpha1));
  f.push_back(angle(&DihedralAngles::alpha2));
  f.push_back(angle(&DihedralAngles::beta1));
  f.push_back(angle(&DihedralAngles::beta2));
  f.push_back(r.residuals ? num((*r.residuals)[0]) : Field{});
  f.push_back(r.residuals ? num((*r.residuals)[1]) : Field{});
  f.push_back(num(r.det_b));
  f.push_back(opt_str(r.signature.has_value(), r.signature ? signature_text(*r.signature) : ""));
  f.push_back(opt_str(r.vertex_classes.has_value(), r.vertex_classes ? vertex_text(*r.vertex_classes) : ""));
  for (std::size_t k = 0; k < 4; ++k) {
    f.push_back(r.edge_lengths ? num((*r.edge_lengths)[k]) : Field{});
  }
  f.push_back(integer(r.iterations));
  return f;
}

// Parsing helpers. Values arrive as optional text keyed by column.

double parse_real(const std::string& s) {
  if (s == "nan") return std::nan("");
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidParams(fmt::format("not a number: '{}'", s));
  }
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidParams(fmt::format("not an integer: '{}'", s));
  }
  return v;
}

template <class Enum, std::size_t N>
Enum parse_enum(const std::string& s, const std::array<Enum, N>& all) {
  for (Enum e : all) {
    if (to_string(e) == s) return e;
  }
  throw InvalidParams(fmt::format("unknown value '{}'", s));
}

constexpr std::array kRealizations = {RealizationClass::Spherical, RealizationClass::HyperbolicIdeal,
                                      RealizationClass::HyperbolicOuter, RealizationClass::NoProperSolution,
                                      RealizationClass::ExcludedSymmetric};
constexpr std::array kStatuses = {SolveStatus::Solved, SolveStatus::NoProperSolution,
                                  SolveStatus::BoundarySolution, SolveStatus::Diverged};
constexpr std::array kVertexClasses = {VertexClass::Proper, VertexClass::Ideal, VertexClass::Outer};

OutputRecord from_fields(const std::vector<std::optional<std::string>>& v) {
  if (v.size() != kColumns.size()) {
    throw InvalidParams(fmt::format("expected {} fields, got {}", kColumns.size(), v.size()));
  }
  auto need = [&](std::size_t k) -> const std::string& {
    if (!v[k]) throw InvalidParams(fmt::format("missing field '{}'", kColumns[k]));
    return *v[k];
  };
  auto real_or_nan = [&](std::size_t k) { return v[k] ? parse_real(*v[k]) : std::nan(""); };

  OutputRecord r;
  r.a = parse_int(need(0));
  r.b = parse_int(need(1));
  r.swapped = need(2) == "true";
  r.realization = parse_enum(need(3), kRealizations);
  if (v[4]) r.status = parse_enum(*v[4], kStatuses);
  if (v[5]) r.b_max = parse_int(*v[5]);
  if (v[6] && v[7]) {
    Inequality in{parse_real(*v[6]), parse_real(*v[7]), false};
    in.strict = in.lhs - in.rhs > kBoundaryTolerance;
    r.inequality = in;
  }
  if (v[9]) {
    r.angles = DihedralAngles{parse_real(need(9)), parse_real(need(10)), parse_real(need(11)),
                              parse_real(need(12))};
  }
  if (v[13] && v[14]) r.residuals = std::array{parse_real(*v[13]), parse_real(*v[14])};
  if (v[15]) r.det_b = parse_real(*v[15]);
  if (v[16]) {
    Signature s;
    if (std::sscanf(v[16]->c_str(), "%d/%d/%d", &s.positive, &s.negative, &s.zero) != 3) {
      throw InvalidParams(fmt::format("bad signature '{}'", *v[16]));
    }
    r.signature = s;
  }
  if (v[17]) {
    std::array<std::optional<VertexClass>, 4> vc{};
    std::size_t start = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      const std::size_t end = v[17]->find('|', start);
      const std::string part = v[17]->substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (part != "Ambiguous") vc[i] = parse_enum(part, kVertexClasses);
      if (end == std::string::npos && i < 3) throw InvalidParams("too few vertex classes");
      start = end + 1;
    }
    r.vertex_classes = vc;
  }
  if (v[18] || v[19] || v[20] || v[21]) {
    r.edge_lengths = std::array{real_or_nan(18), real_or_nan(19), real_or_nan(20), real_or_nan(21)};
  }
  if (v[22]) r.iterations = parse_int(*v[22]);
  return r;
}

}  // namespace

std::string_view to_string(OutputFormat f) {
  return f == OutputFormat::Csv ? "csv" : "json-lines";
}

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json-lines") return OutputFormat::JsonLines;
  return std::nullopt;
}

OutputRecord classify_record(const SimplexParams& params) {
  OutputRecord r;
  r.a = params.a;
  r.b = params.b;
  r.swapped = params.swapped;
  r.realization = classify_realization(params);
  if (params.a >= 2) r.b_max = compute_bmax(params.a);
  if (params.a >= 2 && params.b > params.a) r.inequality = realizability_inequality(params);
  return r;
}

OutputRecord solve_record(const SolveReport& rep) {
  OutputRecord r = classify_record(rep.params);
  r.realization = rep.realization;
  r.status = rep.status;
  if (rep.angles) {
    r.angles = rep.angles;
  } else if (rep.boundary_point) {
    r.angles = angles_from_reduced(rep.params, rep.boundary_point->alpha1, rep.boundary_point->beta1);
  }
  if (rep.angles || rep.boundary_point) r.residuals = std::array{rep.residual_f1, rep.residual_f2};
  if (rep.verification) {
    r.det_b = rep.verification->det_b;
    r.signature = rep.verification->signature;
    r.vertex_classes = rep.verification->vertex_classes;
    r.edge_lengths = rep.verification->edge_lengths;
  }
  r.iterations = rep.iterations;
  return r;
}

std::string csv_header() {
  std::string out;
  for (std::size_t k = 0; k < kColumns.size(); ++k) {
    if (k) out += ',';
    out += kColumns[k];
  }
  return out;
}

std::string format_record(const OutputRecord& rec, const RecordStyle& style) {
  const auto f = fields(rec, style.degrees);
  std::string out;
  if (style.format == OutputFormat::Csv) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (k) out += ',';
      if (f[k].text) out += *f[k].text;
    }
    return out;
  }
  out += '{';
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) out += ',';
    out += fmt::format("\"{}\":", kColumns[k]);
    if (!f[k].text) {
      out += "null";
    } else if (f[k].quoted) {
      out += nlohmann::json(*f[k].text).dump();
    } else {
      out += *f[k].text;
    }
  }
  out += '}';
  return out;
}

OutputRecord parse_csv_record(std::string_view line) {
  std::vector<std::optional<std::string>> v;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(',', start);
    const std::string_view cell = line.substr(start, end == std::string_view::npos ? line.npos : end - start);
    v.push_back(cell.empty() ? std::nullopt : std::optional<std::string>(cell));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return from_fields(v);
}

OutputRecord parse_json_record(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidParams(e.what());
  }
  std::vector<std::optional<std::string>> v;
  for (std::string_view key : kColumns) {
    const auto it = j.find(std::string(key));
    if (it == j.end() || it->is_null()) {
      v.emplace_back();
    } else if (it->is_string()) {
      v.emplace_back(it->get<std::string>());
    } else if (it->is_boolean()) {
      v.emplace_back(it->get<bool>() ? "true" : "false");
    } else if (it->is_number_integer()) {
      v.emplace_back(fmt::format("{}", it->get<long long>()));
    } else {
      v.emplace_back(real(it->get<double>()));
    }
  }
  return from_fields(v);
}

std::string grid_csv_header() { return "alpha1,beta1,f1,f2,d1,d2"; }

std::string format_grid_row(const EdgeSample& s) {
  return fmt::format("{},{},{},{},{},{}", real(s.alpha1), real(s.beta1), real(s.f1), real(s.f2), real(s.d1),
                     real(s.d2));
}

ExitCode exit_code_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return ExitCode::Ok;
    case SolveStatus::NoProperSolution:
    case SolveStatus::BoundarySolution: return ExitCode::NoSolution;
    case SolveStatus::Diverged: return ExitCode::Diverged;
  }
  return ExitCode::Diverged;
}

}  // namespace edgecond
