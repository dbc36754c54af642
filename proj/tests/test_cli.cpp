#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lgmk/cli.hpp"

using namespace lgmk;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("periods as CSV") {
  const Run r = run({"periods", "--preset", "P2", "--order", "9"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "degree,numerator,denominator\n0,1,1\n3,6,1\n6,90,1\n9,1680,1\n");
  const Run q = run({"periods", "--preset", "P2", "--order", "6", "--kind", "quantum"});
  CHECK(q.out == "degree,numerator,denominator\n0,1,1\n3,1,1\n6,1,8\n");
  const Run c = run({"periods", "--preset", "P1", "--order", "4", "--kind", "classical", "--format", "json"});
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["coefficients"].size() == 3);
  CHECK(j["coefficients"][2]["value"] == "6");
}

TEST_CASE("describe") {
  const Run r = run({"describe", "--preset", "P2"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["m"] == 3);
  CHECK(j["max_cone_count"] == 3);
  CHECK(j["W"] == "x1 + x2 + t/(x1*x2)");
  CHECK(j["mirror_map_trivial"] == true);
}

TEST_CASE("potential, theta products and recurrences") {
  const Run w = run({"potential", "--preset", "P1xP1", "--format", "text"});
  CHECK(w.out == "x1 + x3 + t1/x1 + t2/x3\n");
  const Run cubic = run({"potential", "--preset", "P2_cubic", "--order", "6", "--format", "text"});
  CHECK(cubic.out == "x + 2*t/x^2 + 5*t^2/x^5\n");

  const Run th = run({"theta-product", "--preset", "P2", "--p1", "1,1,0", "--p2", "0,0,1"});
  REQUIRE(th.code == kExitOk);
  CHECK(nlohmann::json::parse(th.out)["product"] == "(t^3)*theta(0,0,0)");

  const Run q = run({"qde", "--preset", "P2"});
  REQUIRE(q.code == kExitOk);
  const auto j = nlohmann::json::parse(q.out);
  CHECK(j["order"] == 1);
  CHECK(j["recurrence"] == "d^2*a(d) + (-27*d^2 + 27*d - 6)*a(d-1) = 0");
}

TEST_CASE("gamma-check exit codes") {
  const Run ok = run({"gamma-check", "--preset", "P1", "--cycle", "compact", "--sheaf", "Opt", "--order", "8"});
  CHECK(ok.code == kExitOk);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["rel_err"] == 0);
  CHECK(j["exact_match"] == true);
  CHECK(j["precision"] == 15);

  const Run real = run({"gamma-check", "--preset", "P1", "--cycle", "real", "--sheaf", "OX", "--z", "1,2", "--t",
                        "0.1,0.2", "--format", "csv"});
  CHECK(real.code == kExitOk);
  std::istringstream lines(real.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 5);

  // an impossible tolerance is a verification failure, not an input error
  const Run strict = run({"gamma-check", "--preset", "P2", "--cycle", "real", "--sheaf", "OX", "--z", "1", "--t",
                          "0.05", "--tol", "1e-300"});
  CHECK(strict.code == kExitVerificationFailed);
}

TEST_CASE("input errors") {
  CHECK(run({"describe", "--preset", "P9"}).code == kExitInputError);
  CHECK(run({"describe"}).code == kExitInputError);
  CHECK(run({"bogus"}).code == kExitInputError);
  CHECK(run({"periods", "--preset", "P2", "--kind", "weird"}).code == kExitInputError);
  CHECK(run({"gamma-check", "--preset", "P1", "--z", "-1"}).code == kExitInputError);
  CHECK(run({"gamma-check", "--preset", "P1", "--cycle", "real", "--sheaf", "OX", "--t", "1e-9"}).code ==
        kExitInputError);
  CHECK(run({"theta-product", "--preset", "P2", "--p1", "1,0", "--p2", "0,0,1"}).code == kExitInputError);

  const auto dir = std::filesystem::temp_directory_path();
  const auto bad = dir / "lgmk_bad_geometry.json";
  std::ofstream(bad) << "{\"name\": ";
  const Run r = run({"describe", bad.string()});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("malformed") != std::string::npos);

  const auto wrong = dir / "lgmk_not_anticanonical.json";
  std::ofstream(wrong) << R"({"name": "X", "dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]],
    "ne_generators": 1, "intersection": [[1, 1]], "anticanonical_degree": [2],
    "cohomology": {"basis": [{"name": "1", "degree": 0}, {"name": "H", "degree": 2}], "mult": [], "integration": [0, 1]},
    "divisor_classes": [[0, 1], [0, 1]], "c1": [0, 3]})";
  const Run w = run({"describe", wrong.string()});
  CHECK(w.code == kExitInputError);
  CHECK(w.err.find("not anticanonical") != std::string::npos);
  std::filesystem::remove(bad);
  std::filesystem::remove(wrong);
}

TEST_CASE("outputs are byte-identical across runs") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "lgmk_run_a.json", b = dir / "lgmk_run_b.json";
  for (const auto& p : {a, b})
    CHECK(run({"gamma-check", "--preset", "P2", "--cycle", "real", "--sheaf", "OX", "--z", "1", "--t", "0.05",
               "--output", p.string()})
              .code == kExitOk);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
