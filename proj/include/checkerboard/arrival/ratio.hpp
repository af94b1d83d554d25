#pragma once

#include "checkerboard/propagator/interval.hpp"

namespace checkerboard {

struct ScalingEstimates {
  double first;  // Pi1 / Pi ~ 2 (v/c)^2
  double cross;  // Pi_cross / Pi ~ 2 v/c
};

// Throws DomainError unless 0 < v/c < 1.
ScalingEstimates scaling_estimates(double v_over_c);

// First-arrival share of each propagator component.
//   exact_pp = 2v/(c+v), exact_mm = 2v/(c-v)   (K1++ over K++ and K--)
//   exact_pm = [J0 + (c-v)/(c+v) J2] / J0
//   asymptotic_pm: exact_pm with J0 and J2 replaced by their two-term
//   Hankel forms (z = l >= 10, NaN below)
// near_singular is set when |J0(l)| < 1e-8, where exact_pm blows up.
struct FirstArrivalRatios {
  double exact_pp;
  double exact_mm;
  double exact_pm;
  double asymptotic_pm;
  bool near_singular;
};

// Requires x > 0 and l > 0 (DomainError).
FirstArrivalRatios ratio_first_to_full(const SpacetimeInterval& iv);

}  // namespace checkerboard
