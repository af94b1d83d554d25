#pragma once

#include <utility>

#include "checkerboard/component.hpp"

namespace checkerboard {

// Minimum-uncertainty Gaussian spinor at t = 0, natural units:
//   Psi0(x) = (2 pi)^(-1/4) dx^(-1/2) exp[-(x - x0)^2 / (2 dx)^2 + i k0 x]
//   Psi+ = -g Psi0,  Psi- = sqrt(1 - g^2) Psi0
// The local velocity J/rho = (2 g^2 - 1) c is the same everywhere.
class GaussianPacket {
 public:
  // Throws DomainError unless dx > 0 and 0 <= g <= 1.
  GaussianPacket(double x0, double dx, double k0, double g);

  double x0() const { return x0_; }
  double dx() const { return dx_; }
  double k0() const { return k0_; }
  double g() const { return g_; }
  double dk() const { return 0.5 / dx_; }
  double velocity() const { return 2.0 * g_ * g_ - 1.0; }

  Complex psi0(double x) const;

 private:
  double x0_;
  double dx_;
  double k0_;
  double g_;
  double norm_;
};

// g = sqrt((1 + u)/2) so that (2 g^2 - 1) = u. Throws DomainError for |u| >= 1.
double g_for_velocity(double v_over_c);

struct Spinor {
  Complex plus;
  Complex minus;
};

Spinor initial_spinor(const GaussianPacket& p, double x);

struct DensityCurrent {
  double rho;
  double current;
};

// rho = |psi+|^2 + |psi-|^2, J = c (|psi+|^2 - |psi-|^2).
DensityCurrent rho_and_current(Complex psi_plus, Complex psi_minus);

}  // namespace checkerboard
