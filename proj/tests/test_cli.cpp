#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "edgecond/record.hpp"
#include "reference.hpp"

using namespace edgecond;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(EDGECOND_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<double> cells(const std::string& line) {
  std::vector<double> v;
  std::istringstream in(line);
  for (std::string c; std::getline(in, c, ',');) v.push_back(std::stod(c));
  return v;
}

}  // namespace

TEST_CASE("classify") {
  auto r = run("classify 2 6");
  CHECK(r.code == 0);
  auto rec = parse_csv_record(lines(r.out).at(1));
  CHECK(rec.realization == RealizationClass::HyperbolicOuter);
  CHECK(rec.b_max == 7);

  r = run("classify 1 5 --format json-lines");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["class"] == "Spherical");

  r = run("classify 6 3");
  rec = parse_csv_record(lines(r.out).at(1));
  CHECK(rec.swapped);
  CHECK(rec.a == 3);
  CHECK(rec.b == 6);

  CHECK(run("classify 0 3").code == 2);
  CHECK(run("classify 3").code == 2);
}

TEST_CASE("solve") {
  auto r = run("solve 4 8");
  CHECK(r.code == 0);
  auto rec = parse_csv_record(lines(r.out).at(1));
  REQUIRE(rec.angles);
  CHECK(std::abs(rec.angles->alpha1 - 0.745659613) < 1e-8);
  CHECK(std::abs(rec.angles->beta1 - 0.070377390) < 1e-8);

  // The emitted record parses back to the in-memory report.
  const auto mem = solve_record(solve(normalize_params(4, 8)));
  CHECK(rec == mem);

  r = run("solve 2 9");
  CHECK(r.code == 1);
  CHECK(parse_csv_record(lines(r.out).at(1)).status == SolveStatus::NoProperSolution);

  r = run("solve 2 8 --format json-lines");
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["status"] == "BoundarySolution");

  CHECK(run("solve 3 8 --method fixed --max-iter 3").code == 3);
  CHECK(run("solve 3 5 --method bogus").code == 2);
  CHECK(run("solve 3 5 --tol -1").code == 2);
  CHECK(run("solve 1 5").code == 2);

  for (const char* m : {"fixed", "newton", "oracle", "auto"}) {
    r = run(std::string("solve 5 8 --tol 1e-10 --method ") + m);
    CHECK(r.code == 0);
    rec = parse_csv_record(lines(r.out).at(1));
    CHECK(std::abs(rec.angles->alpha1 - 0.556204786) < 1e-8);
  }

  r = run("solve 3 5 --degrees --format json-lines");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["angle_unit"] == "deg");
  CHECK(j["alpha1"].get<double>() == doctest::Approx(0.895452612 * 180.0 / 3.141592653589793).epsilon(1e-8));
}

TEST_CASE("table") {
  auto r = run("table --a 2..6 --b-upto bmax --format csv");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 28);
  CHECK(ls[0] == csv_header());
  for (std::size_t k = 0; k < reference::kVerifiedRoots.size(); ++k) {
    const auto rec = parse_csv_record(ls[k + 1]);
    const auto& v = reference::kVerifiedRoots[k];
    CHECK(rec.a == v.a);
    CHECK(rec.b == v.b);
    CHECK(rec.status == SolveStatus::Solved);
    CHECK(std::abs(rec.angles->alpha1 - v.alpha1) < 1e-8);
    CHECK(std::abs(rec.angles->beta1 - v.beta1) < 1e-8);
  }

  r = run("table --a 2..2 --b 3..3");
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 2);

  r = run("table --a 2..3 --b 7..10 --format json-lines");
  CHECK(r.code == 0);
  const auto js = lines(r.out);
  REQUIRE(js.size() == 8);
  CHECK(nlohmann::json::parse(js[1])["class"] == "NoProperSolution");
  CHECK(nlohmann::json::parse(js[1])["status"].is_null());

  CHECK(run("table --a 3..2 --b 3..5").code == 2);
  CHECK(run("table --a 4..4 --b 2..4").code == 2);
  CHECK(run("table --a 2..3").code == 2);
  CHECK(run("table --a x --b 3").code == 2);

  // Identical across runs.
  CHECK(run("table --a 2..3 --b 3..6").out == run("table --a 2..3 --b 3..6").out);
}

TEST_CASE("grid") {
  auto r = run("grid 3 5 --resolution 2");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "alpha1,beta1,f1,f2,d1,d2");
  const double pi = 3.141592653589793;
  CHECK(cells(ls[1])[0] == doctest::Approx(pi / 12));
  CHECK(cells(ls[2])[0] == doctest::Approx(pi / 3));
  CHECK(cells(ls[3])[1] == doctest::Approx(pi / 5));

  r = run("grid 3 5 --resolution 100");
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 10001);
  for (std::size_t j = 0; j < 100; ++j) CHECK(cells(rows[1 + j * 100])[2] > 0.0);

  r = run("grid 2 5 --resolution 100");
  rows = lines(r.out);
  for (std::size_t i = 0; i < 100; ++i) CHECK(cells(rows[1 + 99 * 100 + i])[3] <= 0.0);

  CHECK(run("grid 3 5 --resolution 1").code == 2);
  CHECK(run("grid 3 3").code == 2);
}

TEST_CASE("check") {
  auto r = run("check --trials 1000 --seed 42");
  CHECK(r.code == 0);
  CHECK(r.out.find("passed 1000 failed 0") != std::string::npos);
  CHECK(run("check --trials 1 --identity").code == 0);
  r = run("check --trials 10 --inject-singular 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("skipped 2") != std::string::npos);
  CHECK(run("check --trials 0").code == 2);
  CHECK(run("check --trials 200 --rel-tol 0").code == 4);
}

TEST_CASE("no subcommand") { CHECK(run("").code == 2); }
