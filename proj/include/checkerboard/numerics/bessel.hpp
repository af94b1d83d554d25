#pragma once

namespace checkerboard {

// Largest argument accepted by the Bessel evaluators.
inline constexpr double kBesselMaxArgument = 1e9;

// Below this argument the power series is summed; above it the Hankel
// asymptotic expansion is summed to its smallest term.
inline constexpr double kBesselSeriesCutoff = 12.0;

// J_n(z) for n in {0, 1, 2} and 0 <= z <= 1e9. Throws DomainError otherwise.
//
// Accuracy: ~1e-13 relative to max(|J_n|, sqrt(2/(pi z))) for z <= 1e3. For
// larger z the phase z - (2n+1)pi/4 is formed from std::cos/std::sin of the
// double argument, so the result is as exact as z itself.
double bessel_j(int order, double z);

struct BesselJ012 {
  double j0;
  double j1;
  double j2;
};

// J_0, J_1, J_2 at one argument, sharing the trigonometric work.
BesselJ012 bessel_j012(double z);

// J_1(z)/z, continuous at z = 0 where it equals 1/2.
double bessel_j1_over_z(double z);

// The two-term Hankel form of J_0 or J_2 for z >= 10:
//   sqrt(2/(pi z)) [cos(z - pi/4) + sin(z - pi/4)/(8z)]          (order 0)
//   sqrt(2/(pi z)) [cos(z - 5pi/4) - 15 sin(z - 5pi/4)/(8z)]     (order 2)
// Only meant for ratio analysis; bessel_j is the general evaluator.
double bessel_j_hankel2(int order, double z);

}  // namespace checkerboard
