#include "checkerboard/cli/presets.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "checkerboard/propagator/units.hpp"

namespace checkerboard::cli {

using PC = PhysicalConstants;

double FigureSetup::v_over_c() const { return PC::kLambdaCAngstrom * k0_per_angstrom; }

double FigureSetup::t0_seconds() const {
  return std::fabs(x0_angstrom()) / (v_over_c() * PC::kSpeedOfLightAngstromPerSecond);
}

GaussianPacket FigureSetup::packet() const {
  return GaussianPacket(PC::angstrom_to_natural(x0_angstrom()),
                        PC::angstrom_to_natural(dx_angstrom()),
                        PC::wavevector_to_natural(k0_per_angstrom), g_for_velocity(v_over_c()));
}

double FigureSetup::X_natural() const { return PC::angstrom_to_natural(X_angstrom); }

double FigureSetup::t0_natural() const {
  return PC::angstrom_to_natural(std::fabs(x0_angstrom())) / v_over_c();
}

void FigureSetup::validate() const {
  if (!(k0_per_angstrom > 0.0)) throw std::invalid_argument("k0 must be positive");
  if (!(v_over_c() < 1.0)) throw std::invalid_argument("k0 gives v/c >= 1");
  if (!(dk_per_angstrom > 0.0)) throw std::invalid_argument("dk must be positive");
  if (!(x0_in_dx < 0.0)) throw std::invalid_argument("x0 must be negative (packet left of X)");
  if (!(t_max_in_t0 > 0.0)) throw std::invalid_argument("t_max must be positive");
}

FigureSetup figure_preset(const std::string& name) {
  if (name == "fig6") return {"fig6", 1.0, 0.02, -6.0, 2.0, 0.0};
  if (name == "fig7") return {"fig7", 1.0, 0.2, -8.0, 3.0, 0.0};
  throw std::invalid_argument("unknown preset '" + name + "' (expected fig6 or fig7)");
}

void apply_overrides(FigureSetup& setup, const std::map<std::string, double>& overrides) {
  for (const auto& [key, value] : overrides) {
    if (key == "k0") {
      setup.k0_per_angstrom = value;
    } else if (key == "dk") {
      setup.dk_per_angstrom = value;
    } else if (key == "x0") {
      setup.x0_in_dx = value;
    } else if (key == "t_max") {
      setup.t_max_in_t0 = value;
    } else if (key == "X") {
      setup.X_angstrom = value;
    } else {
      throw std::invalid_argument("unknown figure parameter '" + key + "'");
    }
  }
  setup.validate();
}

void echo(const FigureSetup& s, std::ostream& out) {
  char buf[128];
  auto line = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof buf, fmt, args...);
    out << buf << '\n';
  };
  line("preset = %s", s.name.c_str());
  line("k0 = %g 1/Angstrom", s.k0_per_angstrom);
  line("dk = %g 1/Angstrom", s.dk_per_angstrom);
  line("dx = %g Angstrom", s.dx_angstrom());
  line("x0 = %g dx = %g Angstrom", s.x0_in_dx, s.x0_angstrom());
  line("X = %g Angstrom", s.X_angstrom);
  line("v/c = %.3e", s.v_over_c());
  line("t0 = %.3e s", s.t0_seconds());
  line("T_max = %g t0 = %.3e s", s.t_max_in_t0, s.t_max_seconds());
}

}  // namespace checkerboard::cli
