#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("VFRAC_BIN");
  REQUIRE(bin != nullptr);
  return bin;
}

// Runs the tool with the given arguments; stderr is folded into the capture
// only when merge_stderr is set, otherwise discarded.
RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = binary() + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<json> parse_lines(const std::string& out) {
  std::vector<json> recs;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) recs.push_back(json::parse(line));
  }
  return recs;
}

// Canonical form for determinism comparison: wall time is the only field
// allowed to vary between identical invocations.
std::string canonical(const std::string& out) {
  std::string result;
  for (json& rec : parse_lines(out)) {
    rec.erase("wall_ms");
    result += rec.dump();
    result += '\n';
  }
  return result;
}

}  // namespace

TEST_CASE("identical invocations produce identical reports", "[cli]") {
  const std::string args = "deriv --f poly:0,0,1 --t 1 --alpha 0.5";
  const RunResult a = run(args);
  const RunResult b = run(args);
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  REQUIRE(canonical(a.out) == canonical(b.out));
  REQUIRE_FALSE(canonical(a.out).empty());
}

TEST_CASE("derivative of the square at 1 with unit parameters", "[cli]") {
  const RunResult r = run("deriv --f poly:0,0,1 --t 1 --alpha 0.5");
  REQUIRE(r.code == 0);
  const auto recs = parse_lines(r.out);
  REQUIRE(recs.size() == 1);
  REQUIRE(recs[0].at("op") == "deriv");
  REQUIRE_THAT(recs[0].at("value").get<double>(), WithinRel(2.0, 1e-6));
  REQUIRE(recs[0].contains("error_estimate"));
  // Key order is fixed: wall_ms is always the last key on the line.
  REQUIRE_THAT(r.out, ContainsSubstring("\"wall_ms\""));
  REQUIRE(r.out.find("\"wall_ms\"") > r.out.find("\"value\""));
}

TEST_CASE("series evaluation", "[cli]") {
  // z = 0 leaves only the k = 0 term, 1/Gamma(beta).
  const RunResult r = run("eval-ml --z 0 --beta 2");
  REQUIRE(r.code == 0);
  REQUIRE_THAT(parse_lines(r.out)[0].at("value").get<double>(),
               WithinAbs(1.0, 1e-12));
  const RunResult r2 = run("eval-ml --z 0.25");
  REQUIRE(r2.code == 0);
  REQUIRE_THAT(parse_lines(r2.out)[0].at("value").get<double>(),
               WithinRel(1.28125, 1e-12));
}

TEST_CASE("integral of the square-root weight partner", "[cli]") {
  const RunResult r = run("integrate --f pow:0.5 --t 1 --alpha 0.5");
  REQUIRE(r.code == 0);
  REQUIRE_THAT(parse_lines(r.out)[0].at("value").get<double>(),
               WithinRel(1.0, 1e-6));
}

TEST_CASE("partial derivative of the separable field", "[cli]") {
  const RunResult r = run("partial --f sincos --point 1,1 --axis 1");
  REQUIRE(r.code == 0);
  const double want = std::cos(1.0) * std::cos(1.0);
  REQUIRE_THAT(parse_lines(r.out)[0].at("value").get<double>(),
               WithinRel(want, 1e-6));
}

TEST_CASE("jacobian emits one record per entry", "[cli]") {
  const RunResult r =
      run("jacobian --f poly2:xy --f poly2:x+y --point 1,2");
  REQUIRE(r.code == 0);
  const auto recs = parse_lines(r.out);
  REQUIRE(recs.size() == 4);
  double got[2][2] = {{0, 0}, {0, 0}};
  for (const json& rec : recs) {
    got[rec.at("row").get<int>()][rec.at("col").get<int>()] =
        rec.at("value").get<double>();
  }
  const double r2 = std::sqrt(2.0);
  REQUIRE_THAT(got[0][0], WithinRel(2.0, 1e-6));
  REQUIRE_THAT(got[0][1], WithinRel(r2, 1e-6));
  REQUIRE_THAT(got[1][0], WithinRel(1.0, 1e-6));
  REQUIRE_THAT(got[1][1], WithinRel(r2, 1e-6));
}

TEST_CASE("mixed-partial commutation check passes on a smooth field",
          "[cli]") {
  const RunResult r = run("mixed-check --f expsum:0.5 --t 1 --s 1");
  REQUIRE(r.code == 0);
  const json rec = parse_lines(r.out)[0];
  REQUIRE(rec.at("pass").get<bool>());
  REQUIRE(rec.at("residual").get<double>() <= rec.at("tolerance").get<double>() *
              (1.0 + std::abs(rec.at("value").get<double>())));
}

TEST_CASE("green identity check on a rectangle", "[cli]") {
  const RunResult r =
      run("green-check --f poly2:xy --g poly2:x2 --rect 1,2,1,3");
  REQUIRE(r.code == 0);
  const json rec = parse_lines(r.out)[0];
  REQUIRE(rec.at("pass").get<bool>());
  const double lhs = rec.at("lhs").get<double>();
  REQUIRE(rec.at("residual").get<double>() <= 1e-6 * (1.0 + std::abs(lhs)));
  REQUIRE_THAT(rec.at("rhs").get<double>(), WithinRel(lhs, 1e-5));
}

TEST_CASE("operator errors exit 1 and name the error", "[cli]") {
  const RunResult r = run("deriv --f poly:0,0,1 --t 0");
  REQUIRE(r.code == 1);
  const json rec = parse_lines(r.out)[0];
  REQUIRE(rec.at("error") == "DomainError");
  REQUIRE_FALSE(rec.contains("value"));
}

TEST_CASE("usage errors exit 2", "[cli]") {
  REQUIRE(run("no-such-subcommand", true).code == 2);
  REQUIRE(run("deriv --t 1", true).code == 2);               // missing --f
  REQUIRE(run("deriv --f poly:0,0,1 --t 1 --gamma 0", true).code == 2);
  REQUIRE(run("deriv --f nope --t 1", true).code == 2);      // bad selector
  REQUIRE(run("green-check --f poly2:xy --g poly2:x2 --rect 1,2,1", true)
              .code == 2);                                   // short rect
  const RunResult bad = run("deriv --f poly:0,0,1 --t 1 --q 5", true);
  REQUIRE(bad.code == 2);
  REQUIRE_THAT(bad.out, ContainsSubstring("Re(gamma)+p >= q violated"));
}

TEST_CASE("help exits 0", "[cli]") {
  REQUIRE(run("--help", true).code == 0);
}

TEST_CASE("csv output starts with a header row", "[cli]") {
  const RunResult r =
      run("deriv --f poly:0,0,1 --t 1 --alpha 0.5 --format csv");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string header, row;
  REQUIRE(std::getline(in, header));
  REQUIRE(std::getline(in, row));
  REQUIRE(header == "op,inputs,value,error_estimate,wall_ms");
  REQUIRE_THAT(row, ContainsSubstring("deriv,"));
}

TEST_CASE("--out writes the report to a file", "[cli]") {
  const std::string path = "/tmp/vfrac_cli_out_test.json";
  std::remove(path.c_str());
  const RunResult r =
      run("deriv --f poly:0,0,1 --t 1 --alpha 0.5 --out " + path);
  REQUIRE(r.code == 0);
  REQUIRE(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream file;
  file << in.rdbuf();
  const RunResult direct = run("deriv --f poly:0,0,1 --t 1 --alpha 0.5");
  REQUIRE(canonical(file.str()) == canonical(direct.out));
  std::remove(path.c_str());
}

TEST_CASE("verify subcommand is green", "[cli]") {
  const RunResult r = run("verify");
  REQUIRE(r.code == 0);
  const auto recs = parse_lines(r.out);
  REQUIRE(recs.size() >= 30);
  for (const json& rec : recs) {
    INFO(rec.dump());
    REQUIRE(rec.at("pass").get<bool>());
    REQUIRE(rec.at("residual").get<double>() <=
            rec.at("tolerance").get<double>());
  }
}
