#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "checkerboard/arrival/amplitudes.hpp"
#include "checkerboard/component.hpp"
#include "checkerboard/wavepacket/packet.hpp"

namespace checkerboard {

// Arrival-time distribution Pi(T; X) = C (|Psi+(X,T)|^2 + |Psi-(X,T)|^2) on
// T_i = i T_max / n_T, i = 1..n_T, with C fixed by the trapezoid rule on the
// same grid, and its split
//   Pi = Pi1 + Pi23 + Pi_cross
//   Pi1      = C |a1+|^2
//   Pi23     = C (|a23+|^2 + |a23-|^2)
//   Pi_cross = 2 C Re(conj(a1+) a23+)
// All quantities in natural units.
struct ArrivalDecomposition {
  double X = 0.0;
  std::vector<double> T_grid;
  double T_max = 0.0;
  std::vector<double> pi;
  std::vector<double> pi_plus;
  std::vector<double> pi_minus;
  std::vector<double> pi1;
  std::vector<double> pi23;
  std::vector<double> pi_cross;
  double C = 0.0;
  double v_over_c = 0.0;
  std::vector<std::string> warnings;
};

struct ArrivalOptions {
  std::size_t n_T = 400;  // >= 16
  QuadratureParams quad;
  // Also evaluates rho at the grid midpoints and warns when the normalization
  // moves by more than kRefinementTolerance under the doubled grid.
  bool check_refinement = true;
  static constexpr double kRefinementTolerance = 1e-4;
};

// Throws GridError for n_T < 16 and DomainError for T_max <= 0. T points are
// evaluated in parallel; results are identical to the serial version.
ArrivalDecomposition arrival_decomposition(const GaussianPacket& p, double X, double T_max,
                                           const ArrivalOptions& options = {},
                                           Execution execution = Execution::Parallel);

// Trapezoid rule on a sorted grid.
double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace checkerboard
