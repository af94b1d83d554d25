#include "checkerboard/arrival/ratio.hpp"

#include <cmath>
#include <limits>

#include "checkerboard/error.hpp"
#include "checkerboard/numerics/bessel.hpp"

namespace checkerboard {

ScalingEstimates scaling_estimates(double v_over_c) {
  if (!(v_over_c > 0.0 && v_over_c < 1.0)) {
    throw DomainError("scaling estimates need 0 < v/c < 1");
  }
  return {2.0 * v_over_c * v_over_c, 2.0 * v_over_c};
}

FirstArrivalRatios ratio_first_to_full(const SpacetimeInterval& iv) {
  if (!(iv.x() > 0.0)) throw DomainError("first-arrival ratios need x_BA > 0");
  if (!(iv.l() > 0.0)) throw DomainError("first-arrival ratios need l_BA > 0");
  const double v = iv.v();
  const double f = iv.velocity_factor();
  const double z = iv.l();
  const BesselJ012 j = bessel_j012(z);

  FirstArrivalRatios r{};
  r.exact_pp = 2.0 * v / (1.0 + v);
  r.exact_mm = 2.0 * v / (1.0 - v);
  r.exact_pm = (j.j0 + f * j.j2) / j.j0;
  r.near_singular = std::fabs(j.j0) < 1e-8;
  if (z >= 10.0) {
    const double h0 = bessel_j_hankel2(0, z);
    r.asymptotic_pm = (h0 + f * bessel_j_hankel2(2, z)) / h0;
  } else {
    r.asymptotic_pm = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

}  // namespace checkerboard
