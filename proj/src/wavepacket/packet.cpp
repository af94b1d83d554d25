#include "checkerboard/wavepacket/packet.hpp"

#include <cmath>
#include <numbers>

#include "checkerboard/error.hpp"

namespace checkerboard {

GaussianPacket::GaussianPacket(double x0, double dx, double k0, double g)
    : x0_(x0), dx_(dx), k0_(k0), g_(g) {
  if (!(dx > 0.0)) throw DomainError("packet width dx must be positive");
  if (!(g >= 0.0 && g <= 1.0)) throw DomainError("spinor mixing g must lie in [0, 1]");
  norm_ = std::pow(2.0 * std::numbers::pi, -0.25) / std::sqrt(dx);
}

Complex GaussianPacket::psi0(double x) const {
  const double s = (x - x0_) / (2.0 * dx_);
  return std::polar(norm_ * std::exp(-s * s), k0_ * x);
}

double g_for_velocity(double v_over_c) {
  if (!(std::fabs(v_over_c) < 1.0)) {
    throw DomainError("packet velocity must satisfy |v/c| < 1");
  }
  return std::sqrt(0.5 * (1.0 + v_over_c));
}

Spinor initial_spinor(const GaussianPacket& p, double x) {
  const Complex psi = p.psi0(x);
  const double g = p.g();
  return {-g * psi, std::sqrt(1.0 - g * g) * psi};
}

DensityCurrent rho_and_current(Complex psi_plus, Complex psi_minus) {
  const double a = std::norm(psi_plus);
  const double b = std::norm(psi_minus);
  return {a + b, a - b};
}

}  // namespace checkerboard
