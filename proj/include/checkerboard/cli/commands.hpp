#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace checkerboard::cli {

enum class Command { OracleVerify, PropagatorTable, Figure, RatioScan, Convergence };

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

// Inclusive range start:stop sampled at count points (count 1 -> start).
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  // Parses "start:stop:count" or a single value. Throws std::invalid_argument.
  static Range parse(const std::string& text);
  std::vector<double> values() const;
};

struct RunConfig {
  Command command = Command::OracleVerify;
  std::optional<std::string> preset;
  // Figure overrides (k0, dk in 1/Angstrom; x0 in dx; t_max in t0; X in
  // Angstrom) and grid sizes (n_t, n_x).
  std::map<std::string, double> overrides;
  std::string output_path;  // empty: write to the output stream
  int threads = 0;          // 0: OpenMP default

  // oracle-verify
  int max_n = 16;

  // propagator-table: natural units, x and t in lambda_c and lambda_c/c.
  std::vector<std::string> components{"++", "+-", "-+", "--"};
  std::vector<std::string> variants{"full", "first", "later"};
  Range x_range{0.0, 4.0, 5};
  Range t_range{5.0, 5.0, 1};
  int finite_n = 0;  // lattice size for the finite variants

  // ratio-scan: log-spaced z = l_BA / lambda_c.
  double z_min = 1e3;
  double z_max = 1e6;
  int z_count = 61;
  double v_over_c = 0.5;

  // convergence: interval given by v/c and l/lambda_c.
  double interval_v = 0.5;
  double interval_l = 2.0;
  std::vector<int> n_list{256, 512, 1024, 2048, 4096};
};

// Runs one subcommand. Data go to the output file or `out`, diagnostics to
// `log`. Returns 0, 1 (a verification failed) or 2 (invalid configuration).
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

}  // namespace checkerboard::cli
