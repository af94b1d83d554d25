#include "checkerboard/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "checkerboard/arrival/decomposition.hpp"
#include "checkerboard/arrival/ratio.hpp"
#include "checkerboard/cli/csv.hpp"
#include "checkerboard/cli/presets.hpp"
#include "checkerboard/component.hpp"
#include "checkerboard/lattice/verify.hpp"
#include "checkerboard/parallel.hpp"
#include "checkerboard/propagator/finite_n.hpp"
#include "checkerboard/propagator/propagator.hpp"
#include "checkerboard/propagator/units.hpp"

namespace checkerboard::cli {
namespace {

std::vector<Component> parse_components(const std::vector<std::string>& names) {
  std::vector<Component> out;
  for (const auto& n : names) {
    if (n == "all") return {kAllComponents.begin(), kAllComponents.end()};
    out.push_back(parse_component(n));
  }
  return out;
}

int oracle_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_n < 1 || cfg.max_n > 24) {
    throw std::invalid_argument("--max-n must lie in [1, 24]");
  }
  const auto results = verify_counting(cfg.max_n);
  bool ok = true;
  char buf[256];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof buf, "%-48s %8zu cases  %s", r.name.c_str(), r.cases,
                  r.passed() ? "PASS" : "FAIL");
    out << buf << '\n';
    if (!r.passed()) {
      ok = false;
      out << "    first failure: " << (r.first_failure.empty() ? "no cases" : r.first_failure)
          << '\n';
    }
  }
  out << (ok ? "all suites passed" : "verification FAILED") << '\n';
  return ok ? kExitSuccess : kExitVerificationFailure;
}

int propagator_table(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto components = parse_components(cfg.components);
  for (const auto& v : cfg.variants) {
    if (v != "full" && v != "first" && v != "later" && v != "finite_first" &&
        v != "finite_full") {
      throw std::invalid_argument("unknown variant '" + v +
                                  "' (full, first, later, finite_first, finite_full)");
    }
    if (v.starts_with("finite") && cfg.finite_n < 1) {
      throw std::invalid_argument("finite variants need --n >= 1");
    }
  }
  CsvWriter csv(out, {"x_BA_lambda_c", "t_BA_lambda_c_over_c", "component", "variant", "re", "im"});
  std::size_t skipped = 0;
  for (double t : cfg.t_range.values()) {
    for (double x : cfg.x_range.values()) {
      const auto iv = SpacetimeInterval::inside_cone(x, t);
      if (!iv) {
        ++skipped;
        continue;
      }
      for (Component c : components) {
        for (const auto& variant : cfg.variants) {
          const bool needs_left = variant != "full";
          if (needs_left && !(x > 0.0)) {
            ++skipped;
            continue;
          }
          if (variant == "finite_first" && c != Component::PlusPlus &&
              c != Component::PlusMinus) {
            continue;
          }
          double x_out = x;
          Complex k;
          if (variant == "full") {
            k = k_full(c, *iv);
          } else if (variant == "first") {
            k = k_first(c, *iv);
          } else if (variant == "later") {
            k = k_later(c, *iv);
          } else {
            const LatticePoint lp = snap_to_lattice(*iv, cfg.finite_n);
            if (variant == "finite_first" && lp.grid.m() < 1) {
              ++skipped;
              continue;
            }
            x_out = lp.interval.x();
            k = k_finite_n(c, lp.interval, cfg.finite_n,
                           variant == "finite_first" ? FiniteVariant::First : FiniteVariant::Full);
          }
          csv << x_out << t << to_string(c) << variant << k.real() << k.imag();
          csv.end_row();
        }
      }
    }
  }
  if (skipped > 0) log << "skipped " << skipped << " entries outside their domain\n";
  return kExitSuccess;
}

double take(std::map<std::string, double>& m, const std::string& key, double fallback) {
  const auto it = m.find(key);
  if (it == m.end()) return fallback;
  const double v = it->second;
  m.erase(it);
  return v;
}

std::size_t as_count(double v, const char* name) {
  if (!(v >= 1.0) || v != std::floor(v)) {
    throw std::invalid_argument(std::string(name) + " must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

int figure(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (!cfg.preset) throw std::invalid_argument("figure needs --preset fig6|fig7");
  FigureSetup setup = figure_preset(*cfg.preset);
  auto overrides = cfg.overrides;
  ArrivalOptions options;
  options.n_T = as_count(take(overrides, "n_t", static_cast<double>(options.n_T)), "n_t");
  options.quad.n_points =
      as_count(take(overrides, "n_x", static_cast<double>(options.quad.n_points)), "n_x");
  apply_overrides(setup, overrides);
  echo(setup, log);

  const ArrivalDecomposition d = arrival_decomposition(
      setup.packet(), setup.X_natural(), setup.t_max_natural(), options, Execution::Parallel);
  for (const auto& w : d.warnings) log << "warning: " << w << '\n';

  const double sec = PhysicalConstants::seconds_per_natural_time();
  const double t0 = setup.t0_natural();
  const ScalingEstimates est = scaling_estimates(setup.v_over_c());
  CsvWriter csv(out, {"T_seconds", "T_over_t0", "Pi", "Pi_plus", "Pi_minus", "Pi1", "Pi23",
                      "Pi_cross", "Pi1_scaled", "Pi_cross_scaled"});
  for (std::size_t i = 0; i < d.T_grid.size(); ++i) {
    // Densities per natural time unit -> per second.
    csv << d.T_grid[i] * sec << d.T_grid[i] / t0 << d.pi[i] / sec << d.pi_plus[i] / sec
        << d.pi_minus[i] / sec << d.pi1[i] / sec << d.pi23[i] / sec << d.pi_cross[i] / sec
        << d.pi1[i] / est.first / sec << d.pi_cross[i] / est.cross / sec;
    csv.end_row();
  }
  return kExitSuccess;
}

int ratio_scan(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.z_min > 0.0 && cfg.z_max >= cfg.z_min) || cfg.z_count < 1) {
    throw std::invalid_argument("ratio-scan needs 0 < z-min <= z-max and count >= 1");
  }
  if (!(cfg.v_over_c > 0.0 && cfg.v_over_c < 1.0)) {
    throw std::invalid_argument("ratio-scan needs 0 < v < 1");
  }
  CsvWriter csv(out, {"z", "v_over_c", "exact_pp", "exact_mm", "exact_pm", "asymptotic_pm",
                      "near_singular"});
  const double gamma = 1.0 / std::sqrt(1.0 - cfg.v_over_c * cfg.v_over_c);
  for (int i = 0; i < cfg.z_count; ++i) {
    const double f = cfg.z_count == 1 ? 0.0 : static_cast<double>(i) / (cfg.z_count - 1);
    const double z = cfg.z_min * std::pow(cfg.z_max / cfg.z_min, f);
    const double t = z * gamma;
    const auto r = ratio_first_to_full(make_interval(cfg.v_over_c * t, t));
    csv << z << cfg.v_over_c << r.exact_pp << r.exact_mm << r.exact_pm << r.asymptotic_pm
        << static_cast<int>(r.near_singular);
    csv.end_row();
  }
  return kExitSuccess;
}

int convergence(const RunConfig& cfg, std::ostream& out) {
  const double v = cfg.interval_v;
  const double l = cfg.interval_l;
  if (!(v > 0.0 && v < 1.0) || !(l > 0.0)) {
    throw std::invalid_argument("convergence needs 0 < v < 1 and l > 0");
  }
  const double t = l / std::sqrt(1.0 - v * v);
  const SpacetimeInterval iv = make_interval(v * t, t);
  const auto components = parse_components(cfg.components);
  CsvWriter csv(out, {"N", "component", "x_lattice", "t", "finite_re", "finite_im", "closed_re",
                      "closed_im", "rel_error"});
  for (Component c : components) {
    if (c != Component::PlusPlus && c != Component::PlusMinus) continue;
    for (int n : cfg.n_list) {
      const LatticePoint lp = snap_to_lattice(iv, n);
      if (lp.grid.m() < 1) continue;
      const Complex fin = k_finite_n(c, lp.interval, n, FiniteVariant::First);
      const Complex ref = k_first(c, lp.interval);
      csv << n << to_string(c) << lp.interval.x() << t << fin.real() << fin.imag()
          << ref.real() << ref.imag() << std::abs(fin - ref) / std::abs(ref);
      csv.end_row();
    }
  }
  return kExitSuccess;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  switch (cfg.command) {
    case Command::OracleVerify: return oracle_verify(cfg, out);
    case Command::PropagatorTable: return propagator_table(cfg, out, log);
    case Command::Figure: return figure(cfg, out, log);
    case Command::RatioScan: return ratio_scan(cfg, out);
    case Command::Convergence: return convergence(cfg, out);
  }
  return kExitUsage;
}

}  // namespace

Range Range::parse(const std::string& text) {
  Range r;
  const auto a = text.find(':');
  try {
    if (a == std::string::npos) {
      r.start = r.stop = std::stod(text);
      return r;
    }
    const auto b = text.find(':', a + 1);
    if (b == std::string::npos) throw std::invalid_argument("missing count");
    r.start = std::stod(text.substr(0, a));
    r.stop = std::stod(text.substr(a + 1, b - a - 1));
    r.count = std::stoi(text.substr(b + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("range '" + text + "' is not start:stop:count or a number");
  }
  if (r.count < 1) throw std::invalid_argument("range '" + text + "' needs count >= 1");
  return r;
}

std::vector<double> Range::values() const {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    v[i] = count == 1 ? start : start + (stop - start) * i / (count - 1);
  }
  return v;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  set_thread_count(config.threads);
  try {
    if (config.output_path.empty()) return dispatch(config, out, log);
    std::ofstream file(config.output_path);
    if (!file) throw std::invalid_argument("cannot open " + config.output_path);
    const int status = dispatch(config, file, log);
    file.close();
    if (!file) throw std::runtime_error("failed writing " + config.output_path);
    return status;
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace checkerboard::cli
