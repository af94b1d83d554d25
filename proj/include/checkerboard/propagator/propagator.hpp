#pragma once

#include "checkerboard/component.hpp"
#include "checkerboard/propagator/interval.hpp"

// Closed-form components of the retarded 1+1 free Dirac propagator
// (natural units, without the light-cone delta terms):
//   K++ = -(t + x)/(2 l) J1(l)      K-- = -(t - x)/(2 l) J1(l)
//   K+- = K-+ = (i/2) J0(l)
// and its split into first arrivals at x_B and later arrivals:
//   K1++ = -(x/l) J1(l)             K1+- = (i/2) [J0(l) + (t-x)/(t+x) J2(l)]
//   K23++ = K--                      K23+- = -(i/2) (t-x)/(t+x) J2(l)
//   K23-+ = K-+,  K23-- = K--  (no first arrivals with beta = - from the left)
// On the cone l -> 0 the limit J1(l)/l -> 1/2 is used.

namespace checkerboard {

Complex k_full(Component component, const SpacetimeInterval& iv);

// Requires x > 0 (arrival from the left); DomainError otherwise.
Complex k_first(Component component, const SpacetimeInterval& iv);

// Requires x > 0; k_first + k_later = k_full for every component.
Complex k_later(Component component, const SpacetimeInterval& iv);

// Everything a quadrature point needs, from one Bessel evaluation. Valid for
// x >= 0 (x = 0 is the arrival point itself, where first-arrival parts take
// their continuous limit).
struct KernelSet {
  double k_pp;       // real
  double k_mm;       // real
  double k_pm_imag;  // K+- = K-+ = i * k_pm_imag
  double k1_pp;      // real
  double k1_pm_imag;
  double k23_pp;
  double k23_pm_imag;
};

KernelSet evaluate_kernels(const SpacetimeInterval& iv);

}  // namespace checkerboard
