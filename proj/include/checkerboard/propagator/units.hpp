#pragma once

// All propagator and arrival arithmetic runs in natural units: lengths in
// Compton wavelengths lambda_c = hbar/(m c), times in lambda_c / c, so that
// hbar = c = m = 1. Conversions to Angstrom and seconds happen only at the
// I/O boundary.

namespace checkerboard {

struct PhysicalConstants {
  double hbar = 1.0;
  double c = 1.0;
  double m = 1.0;
  double lambda_c = 1.0;  // hbar / (m c)

  // Electron Compton wavelength (reduced) and the speed of light, for I/O.
  static constexpr double kLambdaCAngstrom = 3.8616e-3;
  static constexpr double kSpeedOfLightAngstromPerSecond = 2.99792458e18;

  static constexpr double angstrom_to_natural(double length_angstrom) {
    return length_angstrom / kLambdaCAngstrom;
  }
  static constexpr double natural_to_angstrom(double length) { return length * kLambdaCAngstrom; }
  // Wave vector in 1/Angstrom -> 1/lambda_c.
  static constexpr double wavevector_to_natural(double k_per_angstrom) {
    return k_per_angstrom * kLambdaCAngstrom;
  }
  static constexpr double seconds_per_natural_time() {
    return kLambdaCAngstrom / kSpeedOfLightAngstromPerSecond;
  }
  static constexpr double natural_time_to_seconds(double t) { return t * seconds_per_natural_time(); }
};

}  // namespace checkerboard
