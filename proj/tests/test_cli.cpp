// End-to-end checks of the command-line front end: output content and the
// documented exit codes. The binary path and data dir come in through
// compile definitions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(ZDSOLVE_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (fgets(buf.data(), buf.size(), p)) out += buf.data();
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) {
  return std::string(ZDSOLVE_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("solve: the degree-5 example in json") {
  auto r = run("solve " + data("example22.ideal") + " --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dim"] == 0);
  CHECK(j["degree"] == 5);
  CHECK(j["real_roots"] == 3);
  CHECK(j["real_roots_trace"] == 3);
  CHECK(j["eliminant"].get<std::string>() ==
        "Z^5 - 5*Z^4 + 6*Z^3 + Z^2 - 2*Z + 1");
}

TEST_CASE("solve: saturation lists the four F_7 points") {
  auto r = run("solve " + data("example21.ideal") + " --saturate y --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["degree"] == 4);
  REQUIRE(j["points"].size() == 4);
  std::set<std::pair<int, int>> xy;
  for (const auto& p : j["points"])
    xy.insert({p["x"].get<int>(), p["y"].get<int>()});
  CHECK(xy == std::set<std::pair<int, int>>{{0, 1}, {2, 5}, {5, 4}, {6, 6}});
}

TEST_CASE("solve: interval isolation and eliminant override") {
  auto r = run("solve " + data("example22.ideal") +
               " --eliminant x --intervals 1/32 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["intervals"].size() == 3);
}

TEST_CASE("solve: empty generator list reports dim = #vars, no degree") {
  auto r = run("solve " + data("empty.ideal") + " --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dim"] == 2);
  CHECK(j["degree"].is_null());
}

TEST_CASE("gb --dump-gb emits a reparsable ideal file") {
  auto r = run("gb " + data("example21.ideal") + " --dump-gb");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ring Fp:7 vars y x order lex") == 0);
  // both generators share the line y = 0 before saturation
  CHECK(r.out.find("y*x^4 + y*x^3 + 3*y*x^2 + 3*y*x") != std::string::npos);
  CHECK(r.out.find("y^2 + 5*y*x + 6*y") != std::string::npos);

  // the dump is itself a valid input and the basis is a fixed point
  std::string tmp = std::string(ZDSOLVE_DATA) + "/.dump_roundtrip.ideal";
  {
    FILE* f = fopen(tmp.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(r.out.c_str(), f);
    fclose(f);
  }
  auto again = run("gb " + tmp + " --dump-gb");
  CHECK(again.exit_code == 0);
  CHECK(again.out == r.out);
  remove(tmp.c_str());
}

TEST_CASE("realroots subcommand") {
  auto r = run("realroots " + data("quintic.ideal") + " --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["all"] == 3);
  CHECK(j["positive"] == 2);
  CHECK(j["negative"] == 1);
  CHECK(j["squarefree"] == true);
}

TEST_CASE("exit codes: unknown case 4, parse error 2, golden-pass 0") {
  CHECK(run("case nosuch").exit_code == 4);
  CHECK(run("solve " + data("broken.ideal")).exit_code == 2);
  auto r = run("case grassmannian-25 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["degree"] == 5);
  CHECK(j["dim"] == 6);
}

TEST_CASE("case all --jobs runs every registered case") {
  auto r = run("case all --jobs 4 --json");
  CHECK(r.exit_code == 0);
  int count = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("case"));
    ++count;
  }
  CHECK(count >= 11);
}

TEST_CASE("stdin input via '-'") {
  std::string cmd = "printf 'ring QQ vars x order lex\\nx^2 - 2\\n' | " +
                    std::string(ZDSOLVE_BIN) + " solve - --json 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (fgets(buf.data(), buf.size(), p)) out += buf.data();
  int status = pclose(p);
  CHECK(WEXITSTATUS(status) == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j["degree"] == 2);
  CHECK(j["real_roots"] == 2);
}

TEST_CASE("case with a dataset index") {
  auto r = run("case hyperboloids --dataset 3 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["real"] == 12);
  CHECK(j["extras"]["dataset"] == 3);
}

TEST_CASE("case --dump-ideal emits a file the solver accepts") {
  auto r = run("case cylinders --dump-ideal --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  auto text = j["extras"]["ideal_file"].get<std::string>();
  CHECK(text.rfind("ring QQ vars r y11 y12 y21 y22 order grevlex", 0) == 0);
  std::string tmp = std::string(ZDSOLVE_DATA) + "/.dumped_case.ideal";
  {
    FILE* f = fopen(tmp.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(text.c_str(), f);
    fclose(f);
  }
  auto solved = run("solve " + tmp + " --json");
  CHECK(solved.exit_code == 0);
  auto sj = nlohmann::json::parse(solved.out);
  CHECK(sj["degree"] == 6);
  CHECK(sj["real_roots_trace"] == 6);
  remove(tmp.c_str());
}

TEST_CASE("budget exceeded exits 3") {
  auto r = run("--budget-ms 1 case spheres-global");
  CHECK((r.exit_code == 3 || r.exit_code == 1));  // budget trips inside the run
  CHECK(r.out.find("budget") != std::string::npos);
}
