#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "checkerboard/cli/commands.hpp"

using checkerboard::cli::Command;
using checkerboard::cli::Range;
using checkerboard::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Checkerboard arrival-time toolkit: lattice counts, Dirac propagators, arrival distributions"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("oracle-verify", "check closed-form counts against enumeration");
  verify->add_option("--max-n", cfg.max_n, "largest checkerboard path length")
      ->capture_default_str();

  std::string x_range = "0:4:5";
  std::string t_range = "5";
  auto* table = app.add_subcommand("propagator-table", "CSV of propagator components");
  table->add_option("--component", cfg.components, "++, +-, -+, -- or all")->capture_default_str();
  table->add_option("--variant", cfg.variants, "full, first, later, finite_first, finite_full")
      ->capture_default_str();
  table->add_option("--x", x_range, "x_BA grid in lambda_c, start:stop:count")
      ->capture_default_str();
  table->add_option("--t", t_range, "t_BA grid in lambda_c/c, start:stop:count")
      ->capture_default_str();
  table->add_option("--n", cfg.finite_n, "lattice steps for the finite variants");

  std::string preset;
  auto* fig = app.add_subcommand("figure", "arrival-time distribution CSV for a figure preset");
  fig->add_option("--preset", preset, "fig6 or fig7")->required()->check(
      CLI::IsMember({"fig6", "fig7"}));
  std::map<std::string, double> values;
  const std::map<std::string, std::string> figure_flags = {
      {"k0", "mean wave vector, 1/Angstrom"},
      {"dk", "wave-vector spread, 1/Angstrom"},
      {"x0", "packet centre in units of dx"},
      {"t-max", "last arrival time in units of t0"},
      {"X", "detector position, Angstrom"},
      {"n-t", "T grid points (default 400)"},
      {"n-x", "x_A Simpson nodes, odd (default 20001)"}};
  for (const auto& [flag, help] : figure_flags) {
    fig->add_option("--" + flag, values[flag], help);
  }

  auto* ratio = app.add_subcommand("ratio-scan", "exact vs asymptotic first-arrival ratios");
  ratio->add_option("--z-min", cfg.z_min)->capture_default_str();
  ratio->add_option("--z-max", cfg.z_max)->capture_default_str();
  ratio->add_option("--count", cfg.z_count, "log-spaced samples")->capture_default_str();
  ratio->add_option("--v", cfg.v_over_c, "v_BA/c")->capture_default_str();

  auto* conv = app.add_subcommand("convergence", "finite-N first-arrival error vs closed form");
  conv->add_option("--v", cfg.interval_v, "v_BA/c")->capture_default_str();
  conv->add_option("--l", cfg.interval_l, "l_BA in lambda_c")->capture_default_str();
  conv->add_option("--n-list", cfg.n_list, "lattice sizes")->delimiter(',')->capture_default_str();
  conv->add_option("--component", cfg.components, "++ and/or +-");

  for (auto* sub : {table, fig, ratio, conv}) {
    sub->add_option("--out", cfg.output_path, "write CSV here instead of stdout");
  }

  try {
    app.parse(argc, argv);
    if (*verify) {
      cfg.command = Command::OracleVerify;
    } else if (*table) {
      cfg.command = Command::PropagatorTable;
      cfg.x_range = Range::parse(x_range);
      cfg.t_range = Range::parse(t_range);
    } else if (*fig) {
      cfg.command = Command::Figure;
      cfg.preset = preset;
      for (const auto& [flag, help] : figure_flags) {
        if (fig->count("--" + flag) == 0) continue;
        std::string key = flag == "t-max" ? "t_max" : flag == "n-t" ? "n_t" : flag == "n-x" ? "n_x" : flag;
        cfg.overrides[key] = values[flag];
      }
    } else if (*ratio) {
      cfg.command = Command::RatioScan;
    } else {
      cfg.command = Command::Convergence;
      if (conv->count("--component") == 0) cfg.components = {"++", "+-"};
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : checkerboard::cli::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return checkerboard::cli::kExitUsage;
  }
  return checkerboard::cli::run(cfg, std::cout, std::cerr);
}
