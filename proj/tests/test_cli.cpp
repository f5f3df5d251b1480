#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <string>

#include "edgereg/serialize.hpp"

using edgereg::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell with `input` on stdin; stderr is dropped.
Run cli(const std::string& args, const std::string& input = "") {
  const auto in = std::filesystem::temp_directory_path() / ("edgereg_cli_" + std::to_string(::getpid()));
  std::ofstream(in) << input;
  const std::string cmd = std::string(EDGEREG_CLI) + " " + args + " < " + in.string() + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (const std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::filesystem::remove(in);
  return r;
}

}  // namespace

TEST_CASE("analyze") {
  const Run k2 = cli("analyze", "A_\n");
  REQUIRE(k2.status == 0);
  const json j = json::parse(k2.out);
  CHECK(j["invariants"]["reg_ideal"] == 2);
  CHECK(j["invariants"]["pd_quotient"] == 1);
  CHECK(j["flags"]["gap_free"] == true);
  CHECK(j["flags"]["claw_free"] == true);

  const Run c5 = cli("analyze --edges", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  REQUIRE(c5.status == 0);
  const json c = json::parse(c5.out);
  CHECK(c["invariants"]["reg_ideal"] == 3);
  CHECK(c["invariants"]["pd_quotient"] == 3);
  CHECK(c["invariants"]["lin_steps"] == 1);

  const Run empty = cli("analyze", "B?\n");
  REQUIRE(empty.status == 0);
  const json e = json::parse(empty.out);
  CHECK(e["invariants"]["reg_ideal"] == 2);
  CHECK(e["invariants"]["zero_ideal_convention"] == true);

  CHECK(cli("analyze", "not graph6 at all\n").status == 2);
  CHECK(cli("analyze --edges", "3 1\n0 7\n").status == 2);
  CHECK(cli("analyze /nonexistent/file").status == 2);
  CHECK(cli("--format human analyze", "Dhc\n").out.find("total: 1 5 5 1") != std::string::npos);
  CHECK(cli("--format csv analyze", "A_\n").out.rfind("path,value\n", 0) == 0);
}

TEST_CASE("verify") {
  const Run terai = cli("verify --gen all_labeled:5 --checks terai");
  REQUIRE(terai.status == 0);
  const json t = json::parse(terai.out);
  CHECK(t["graphs"] == 1024);
  CHECK(t["counts"]["terai"]["pass"] == 1023);
  CHECK(t["counts"]["terai"]["fail"] == 0);

  const Run knm = cli("verify --gen knm:2,3 --checks bounds");
  CHECK(knm.status == 0);
  CHECK(json::parse(knm.out)["counts"]["bounds"]["pass"] == 1);

  CHECK(cli("verify --checks recursion,terai", "A_\nBw\nDhc\n").status == 0);
  CHECK(cli("verify --checks terai", "A_\n!!!\nBw\n").status == 2);
  // reg(I(K3)) = 2 while every cubic ideal has reg >= 3.
  CHECK(cli("verify --checks cubic", "Bw\n").status == 1);
  CHECK(cli("verify --checks nope", "A_\n").status == 2);
  CHECK(cli("verify --gen nothing:3").status == 2);
}

TEST_CASE("guards and configuration") {
  CHECK(cli("--max-n 30 analyze", "A_\n").status == 2);
  CHECK(cli("--max-n 30 --force analyze", "A_\n").status == 0);
  CHECK(cli("--jobs 0 analyze", "A_\n").status == 2);
  CHECK(cli("--field q7 analyze", "A_\n").status == 2);
  CHECK(cli("--format xml analyze", "A_\n").status == 2);
  CHECK(cli("--max-n 4 analyze", "Dhc\n").status == 2);
  CHECK(cli("frobnicate").status == 2);
}

TEST_CASE("dual") {
  const Run p3 = cli("dual", "Bo\n");
  REQUIRE(p3.status == 0);
  const json d = json::parse(p3.out);
  CHECK(d["reg_dual"] == 2);
  CHECK(d["pd_quotient"] == 2);
  CHECK(d["equal"] == true);
  CHECK(cli("dual", "B?\n").status == 2);
}

TEST_CASE("bootstrap-check and gen") {
  const Run b = cli("bootstrap-check --grid 100000");
  CHECK(b.status == 0);
  const json j = json::parse(b.out);
  for (const json& k : j["reports"]) CHECK(k["f_at_1"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(cli("bootstrap-check --k-min 0").status == 2);
  CHECK(cli("bootstrap-check --k-min 3 --k-max 2").status == 2);

  const Run g = cli("gen all_labeled:3");
  CHECK(g.status == 0);
  CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 8);
  CHECK(cli("gen cycle:5").out == "Dhc\n");
}
