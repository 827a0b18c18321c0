#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LIEFIX_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

bool has_warning(const nlohmann::json& env, const std::string& code) {
  for (const auto& w : env["warnings"])
    if (w["code"] == code) return true;
  return false;
}

}  // namespace

TEST_CASE("table") {
  const auto d4 = run("table D4");
  CHECK(d4.code == 0);
  CHECK(d4.out.find("S3, order 6") != std::string::npos);
  CHECK(d4.out.find("Z/2 x Z/2") != std::string::npos);
  const auto j = parse(run("table A1 --json"));
  CHECK(j["version"] == "1.0.0");
  CHECK(j["query"]["command"] == "table");
  CHECK(run("table E6").code == 2);
  CHECK(run("table nonsense").code == 2);
}

TEST_CASE("classify") {
  const auto r = run("classify sl4 --order 2 --json");
  REQUIRE(r.code == 0);
  const auto j = parse(r);
  REQUIRE(j["payload"]["cliques"].size() == 2);
  CHECK(j["payload"]["cliques"][0]["classes"].size() == 3);
  CHECK(j["payload"]["cliques"][1]["classes"].size() == 2);

  const auto tri = parse(run("classify so8 --order 3 --clique rot --json"));
  CHECK(tri["payload"]["cliques"][0]["classes"].size() == 2);
  CHECK(has_warning(tri, "EIGENSPACE_LABEL_MISMATCH"));

  CHECK(run("classify sl8 --order 3").code == 3);
  CHECK(run("classify so4 --order 2").code == 2);
  CHECK(run("classify sl4").code == 2);
  const auto guard = run("classify sl8 --order 3 --json");
  CHECK(parse(guard)["payload"]["error"]["kind"] == "search_guard");
}

TEST_CASE("fixed") {
  const auto r = run("fixed SL4 --outer -1 --sign minus --json");
  REQUIRE(r.code == 0);
  const auto j = parse(r);
  CHECK(j["payload"]["components"].size() == 2);
  for (const auto& c : j["payload"]["components"]) CHECK(c["geometry"] == "Lagrangian");

  const auto deg = parse(run("fixed SL2 --trivial --sign plus --json"));
  CHECK(has_warning(deg, "DEGENERATE_IDENTITY_QUERY"));

  const auto spin = run("fixed Spin8 --clique rot --zeta 1");
  CHECK(spin.code == 0);
  CHECK(spin.out.find("G2") != std::string::npos);
  CHECK(spin.out.find("PSL(3,C)") != std::string::npos);

  CHECK(run("fixed SL4 --trivial --sign minus --genus 1 --alpha 2,0").code == 0);
  const auto bad = run("fixed SL4 --trivial --sign minus --genus 1 --alpha 1,0 --json");
  CHECK(bad.code == 4);
  CHECK(parse(bad)["payload"]["error"]["exit_code"] == 4);
  CHECK(run("fixed SL4 --trivial --sign sideways").code == 2);
  CHECK(run("fixed SL4 --trivial").code == 2);
  CHECK(run("fixed SL4 --trivial --outer -1 --sign plus").code == 2);
  CHECK(run("fixed SL4 --trivial --sign plus --genus -1").code == 2);
}

TEST_CASE("output is deterministic") {
  for (const std::string args : {"classify sp6 --order 2 --json", "fixed SL3 --outer -1 --sign minus",
                                 "fixed Spin8 --clique swap13 --sign minus --json"}) {
    CAPTURE(args);
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
