#include "checkerboard/numerics/bessel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "checkerboard/error.hpp"

namespace checkerboard {
namespace {

void check_argument(double z) {
  if (!(z >= 0.0) || z > kBesselMaxArgument) {
    throw DomainError("Bessel argument must lie in [0, 1e9], got " + std::to_string(z));
  }
}

void check_order(int order) {
  if (order < 0 || order > 2) {
    throw DomainError("Bessel order must be 0, 1 or 2, got " + std::to_string(order));
  }
}

// (z/2)^n sum_k (-z^2/4)^k / (k! (k+n)!), summed in extended precision.
// The largest term at z = 12 is ~4e3, so cancellation costs < 4 digits.
long double power_series(int order, long double z) {
  const long double half = z / 2;
  const long double q = -half * half;
  long double term = 1;
  for (int i = 1; i <= order; ++i) term *= half / i;
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (k > half && std::fabs(term) <= 1e-21L * std::fabs(sum)) break;
  }
  return sum;
}

struct HankelSums {
  long double p;
  long double q;
};

// P and Q of Hankel's expansion J_n = sqrt(2/(pi z)) (P cos chi - Q sin chi),
// summed until the terms stop decreasing or drop below 1e-20.
HankelSums hankel_sums(int order, long double z) {
  const long double mu = 4.0L * order * order;
  HankelSums s{1.0L, 0.0L};
  long double term = 1.0L;
  long double previous = 1.0L;
  for (int k = 1; k < 400; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    term *= (mu - odd * odd) / (8.0L * k * z);
    if (std::fabs(term) >= std::fabs(previous) && k > 2) break;
    const bool negative = ((k / 2) % 2) == 1;
    if (k % 2 == 0) {
      s.p += negative ? -term : term;
    } else {
      s.q += negative ? -term : term;
    }
    if (std::fabs(term) < 1e-20L) break;
    previous = term;
  }
  return s;
}

// cos and sin of chi = z - (2n+1) pi/4, built from cos z and sin z so the large
// argument is reduced exactly by the C library.
struct Phase {
  double cos_chi;
  double sin_chi;
};

Phase phase(int order, double c, double s) {
  constexpr double r = std::numbers::sqrt2 / 2.0;
  switch (order) {
    case 0: return {(c + s) * r, (s - c) * r};
    case 1: return {(s - c) * r, -(s + c) * r};
    default: return {-(c + s) * r, (c - s) * r};
  }
}

double asymptotic(int order, double z, double c, double s) {
  const HankelSums h = hankel_sums(order, z);
  const Phase ph = phase(order, c, s);
  const long double amplitude = std::sqrt(2.0L / (std::numbers::pi_v<long double> * z));
  return static_cast<double>(amplitude * (h.p * ph.cos_chi - h.q * ph.sin_chi));
}

}  // namespace

double bessel_j(int order, double z) {
  check_order(order);
  check_argument(z);
  if (z < kBesselSeriesCutoff) return static_cast<double>(power_series(order, z));
  return asymptotic(order, z, std::cos(z), std::sin(z));
}

BesselJ012 bessel_j012(double z) {
  check_argument(z);
  if (z < kBesselSeriesCutoff) {
    return {static_cast<double>(power_series(0, z)), static_cast<double>(power_series(1, z)),
            static_cast<double>(power_series(2, z))};
  }
  const double c = std::cos(z);
  const double s = std::sin(z);
  return {asymptotic(0, z, c, s), asymptotic(1, z, c, s), asymptotic(2, z, c, s)};
}

double bessel_j1_over_z(double z) {
  check_argument(z);
  if (z < kBesselSeriesCutoff) {
    // sum_k (-z^2/4)^k / (2 k! (k+1)!)
    const long double q = -static_cast<long double>(z) * z / 4;
    long double term = 0.5L;
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
      term *= q / (static_cast<long double>(k) * (k + 1));
      sum += term;
      if (k > z / 2 && std::fabs(term) <= 1e-21L * std::fabs(sum)) break;
    }
    return static_cast<double>(sum);
  }
  return bessel_j(1, z) / z;
}

double bessel_j_hankel2(int order, double z) {
  if (order != 0 && order != 2) {
    throw DomainError("two-term Hankel form is provided for orders 0 and 2 only");
  }
  if (!(z >= 10.0) || z > kBesselMaxArgument) {
    throw DomainError("two-term Hankel form needs 10 <= z <= 1e9, got " + std::to_string(z));
  }
  const Phase ph = phase(order, std::cos(z), std::sin(z));
  const double amplitude = std::sqrt(2.0 / (std::numbers::pi * z));
  if (order == 0) return amplitude * (ph.cos_chi + ph.sin_chi / (8.0 * z));
  return amplitude * (ph.cos_chi - 15.0 * ph.sin_chi / (8.0 * z));
}

}  // namespace checkerboard
