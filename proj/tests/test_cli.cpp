// Drives the installed binary end to end through a shell.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "doctest.h"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
  const char* bin = std::getenv("NIG_BINARY");
  REQUIRE_MESSAGE(bin != nullptr, "NIG_BINARY must point at the nig executable");
  std::string cmd;
  if (!stdin_text.empty()) cmd = "printf '" + stdin_text + "' | ";
  cmd += std::string("'") + bin + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("inertia of K2") {
  auto r = run("inertia --g6 A_");
  CHECK(r.status == 0);
  CHECK(r.out == "p=1 n=1 eta=0\n");
  auto poly = run("inertia --poly --g6 A_");
  CHECK(poly.out == "p=1 n=1 eta=0  x^2 - 1\n");
}

TEST_CASE("stdin is the default input") {
  auto r = run("inertia", "A_\\nBw\\n");
  CHECK(r.status == 0);
  CHECK(r.out == "p=1 n=1 eta=0\np=1 n=2 eta=0\n");
}

TEST_CASE("csv and json output") {
  auto csv = run("--format csv inertia --g6 A_");
  CHECK(csv.out == "graph6,order,p,n,eta\nA_,2,1,1,0\n");
  auto json = run("--format json classify --theorem 3.6 --family cycle --params 8");
  CHECK(json.status == 0);
  auto j = nlohmann::json::parse(json.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["extremal"] == true);
  CHECK(j[0]["family"] == "cycle(8)");
}

TEST_CASE("generate pipes into classify") {
  auto gen = run("generate --family theta --params 5,5,5");
  CHECK(gen.status == 0);
  REQUIRE(gen.out.size() > 1);
  std::string rec = gen.out.substr(0, gen.out.size() - 1);
  auto cls = run("classify --theorem 3.10", rec + "\\n");
  CHECK(cls.status == 0);
  CHECK(cls.out.find("theorem 3.10: extremal family=theta(5,5,5)") == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("--help").status == 0);
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("inertia --g6 'A '").status == 2);
  CHECK(run("classify --theorem 4.1 --g6 A_").status == 2);
  CHECK(run("classify --theorem 3.6 --g6 Bw --g6 A_ --file /dev/null").status == 2);
  CHECK(run("classify --theorem 3.6 --g6 Cl").status == 0);  // C4
  CHECK(run("classify --theorem 3.6 --g6 Bg").status == 2);  // P3 is acyclic
  CHECK(run("generate --family theta --params 2,2,5").status == 2);
  CHECK(run("verify --theorem 3.6 --max-n 7 --no-timing").status == 0);
}

TEST_CASE("verify reports are byte stable") {
  auto a = run("--format json verify --bounds all --max-n 6 --no-timing");
  auto b = run("--format json verify --bounds all --max-n 6 --no-timing --jobs 2 --shards 1");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["graphs_examined"] == 143);
  CHECK(j["pass"] == true);
}

TEST_CASE("trim") {
  auto r = run("trim --family path --params 6");
  CHECK(r.status == 0);
  CHECK(r.out.find("trims=3") == 0);
}
