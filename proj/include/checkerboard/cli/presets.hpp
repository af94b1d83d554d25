#pragma once

#include <map>
#include <ostream>
#include <string>

#include "checkerboard/wavepacket/packet.hpp"

namespace checkerboard::cli {

// Figure parameters in laboratory units. The packet width follows from
// dk = 1/(2 dx); v0/c = lambda_c k0; t0 = |x0| / v0.
struct FigureSetup {
  std::string name;
  double k0_per_angstrom = 1.0;
  double dk_per_angstrom = 0.02;
  double x0_in_dx = -6.0;
  double t_max_in_t0 = 2.0;
  double X_angstrom = 0.0;

  double dx_angstrom() const { return 0.5 / dk_per_angstrom; }
  double x0_angstrom() const { return x0_in_dx * dx_angstrom(); }
  double v_over_c() const;
  double t0_seconds() const;
  double t_max_seconds() const { return t_max_in_t0 * t0_seconds(); }

  // Natural-unit quantities for the arrival module.
  GaussianPacket packet() const;
  double X_natural() const;
  double t0_natural() const;
  double t_max_natural() const { return t_max_in_t0 * t0_natural(); }

  // Throws std::invalid_argument for nonphysical values.
  void validate() const;
};

// "fig6" and "fig7"; throws std::invalid_argument for other names.
FigureSetup figure_preset(const std::string& name);

// Applies overrides keyed k0, dk, x0, t_max, X. Unknown keys throw
// std::invalid_argument.
void apply_overrides(FigureSetup& setup, const std::map<std::string, double>& overrides);

// Human-readable parameter echo, one "name = value" per line.
void echo(const FigureSetup& setup, std::ostream& out);

}  // namespace checkerboard::cli
