#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

#include "checkerboard/cli/commands.hpp"
#include "checkerboard/cli/csv.hpp"
#include "checkerboard/cli/presets.hpp"

using namespace checkerboard::cli;

namespace {

struct Result {
  int status;
  std::string out;
  std::string log;
};

Result run_config(const RunConfig& cfg) {
  std::ostringstream out;
  std::ostringstream log;
  const int status = run(cfg, out, log);
  return {status, out.str(), log.str()};
}

RunConfig small_figure(const std::string& preset) {
  RunConfig cfg;
  cfg.command = Command::Figure;
  cfg.preset = preset;
  cfg.overrides = {{"n_t", 24}, {"n_x", 4001}};
  return cfg;
}

int shell_status(const std::string& args) {
  const char* exe = std::getenv("CHECKERBOARD_CLI");
  if (exe == nullptr) return -1;
  const int raw = std::system((std::string(exe) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1.296e-14) == "1.296e-14");
  CHECK(format_number(-2.0) == "-2");
}

TEST_CASE("CSV rows must match the header") {
  std::ostringstream s;
  CsvWriter csv(s, {"a", "b"});
  csv << 1.5 << "x";
  csv.end_row();
  CHECK(s.str() == "a,b\n1.5,x\n");
  csv << 1.0;
  CHECK_THROWS_AS(csv.end_row(), std::logic_error);
  csv << 2.0;
  CHECK_THROWS_AS(csv << 3.0, std::logic_error);
}

TEST_CASE("ranges") {
  const Range r = Range::parse("0:4:5");
  CHECK(r.values() == std::vector<double>{0, 1, 2, 3, 4});
  CHECK(Range::parse("2.5").values() == std::vector<double>{2.5});
  CHECK_THROWS_AS(Range::parse("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(Range::parse("a:b:c"), std::invalid_argument);
  CHECK_THROWS_AS(Range::parse("0:1:0"), std::invalid_argument);
}

TEST_CASE("presets reproduce the caption constants") {
  const FigureSetup f6 = figure_preset("fig6");
  const FigureSetup f7 = figure_preset("fig7");
  CHECK(f6.dx_angstrom() == 25.0);
  CHECK(f6.x0_angstrom() == -150.0);
  CHECK(f7.dx_angstrom() == 2.5);
  CHECK(f7.x0_angstrom() == -20.0);
  CHECK(f6.t_max_in_t0 == 2.0);
  CHECK(f7.t_max_in_t0 == 3.0);
  CHECK(f6.X_angstrom == 0.0);
  CHECK_THROWS_AS(figure_preset("fig8"), std::invalid_argument);

  std::ostringstream e6;
  echo(f6, e6);
  CHECK(e6.str().find("v/c = 3.862e-03") != std::string::npos);
  CHECK(e6.str().find("t0 = 1.296e-14 s") != std::string::npos);
  std::ostringstream e7;
  echo(f7, e7);
  CHECK(e7.str().find("v/c = 3.862e-03") != std::string::npos);
  CHECK(e7.str().find("t0 = 1.728e-15 s") != std::string::npos);
}

TEST_CASE("overrides") {
  FigureSetup s = figure_preset("fig6");
  apply_overrides(s, {{"k0", 2.0}, {"x0", -4.0}});
  CHECK(s.k0_per_angstrom == 2.0);
  CHECK(s.x0_in_dx == -4.0);
  CHECK(s.dk_per_angstrom == 0.02);
  CHECK_THROWS_AS(apply_overrides(s, {{"bogus", 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(apply_overrides(s, {{"x0", 1.0}}), std::invalid_argument);
}

TEST_CASE("figure output is deterministic and independent of the thread count") {
  RunConfig cfg = small_figure("fig7");
  const Result a = run_config(cfg);
  cfg.threads = 3;
  const Result b = run_config(cfg);
  REQUIRE(a.status == kExitSuccess);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("T_seconds,T_over_t0,Pi,Pi_plus,Pi_minus,Pi1,Pi23,Pi_cross,Pi1_scaled,"
                    "Pi_cross_scaled\n",
                    0) == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 25);
  CHECK(a.log.find("t0 = 1.728e-15 s") != std::string::npos);
}

TEST_CASE("subcommands") {
  RunConfig verify;
  verify.command = Command::OracleVerify;
  verify.max_n = 8;
  const Result v = run_config(verify);
  CHECK(v.status == kExitSuccess);
  CHECK(v.out.find("FAIL") == std::string::npos);
  verify.max_n = 40;
  CHECK(run_config(verify).status == kExitUsage);

  RunConfig table;
  table.command = Command::PropagatorTable;
  table.variants = {"full", "finite_full"};
  table.finite_n = 20;
  table.components = {"+-"};
  table.x_range = Range::parse("0:2:3");
  table.t_range = Range::parse("2");
  const Result t = run_config(table);
  CHECK(t.status == kExitSuccess);
  CHECK(t.out.rfind("x_BA_lambda_c,t_BA_lambda_c_over_c,component,variant,re,im\n", 0) == 0);
  CHECK(t.out.find("1,2,+-,full,0,") != std::string::npos);
  table.finite_n = 0;
  CHECK(run_config(table).status == kExitUsage);
  table.components = {"+x"};
  CHECK(run_config(table).status == kExitUsage);

  RunConfig ratio;
  ratio.command = Command::RatioScan;
  ratio.z_count = 4;
  const Result r = run_config(ratio);
  CHECK(r.status == kExitSuccess);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  ratio.v_over_c = 1.5;
  CHECK(run_config(ratio).status == kExitUsage);

  RunConfig conv;
  conv.command = Command::Convergence;
  conv.components = {"++"};
  conv.n_list = {64, 128};
  const Result c = run_config(conv);
  CHECK(c.status == kExitSuccess);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 3);

  RunConfig bad = small_figure("fig6");
  bad.overrides["n_x"] = 4000;
  CHECK(run_config(bad).status == kExitUsage);
  bad.preset.reset();
  CHECK(run_config(bad).status == kExitUsage);
}

TEST_CASE("executable exit codes") {
  if (std::getenv("CHECKERBOARD_CLI") == nullptr) return;
  CHECK(shell_status("oracle-verify --max-n 6") == 0);
  CHECK(shell_status("--bogus") == 2);
  CHECK(shell_status("") == 2);
  CHECK(shell_status("figure --preset fig9") == 2);
  CHECK(shell_status("figure --preset fig6 --n-x 100") == 2);
  CHECK(shell_status("ratio-scan --count 3 --v 0.2") == 0);
}
