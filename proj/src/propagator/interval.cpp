#include "checkerboard/propagator/interval.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "checkerboard/error.hpp"

namespace checkerboard {
namespace {

void require_positive_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw LightConeError("interval needs t_BA > 0, got " + std::to_string(t));
  }
}

}  // namespace

SpacetimeInterval SpacetimeInterval::make(double x_ba, double t_ba) {
  require_positive_time(t_ba);
  if (!(std::fabs(x_ba) <= t_ba)) {
    throw LightConeError("interval outside the light cone: |x_BA| = " +
                         std::to_string(std::fabs(x_ba)) + " > c t_BA = " + std::to_string(t_ba));
  }
  // (t - x)(t + x) keeps l accurate next to the cone.
  return SpacetimeInterval(x_ba, t_ba, std::sqrt((t_ba - x_ba) * (t_ba + x_ba)));
}

std::optional<SpacetimeInterval> SpacetimeInterval::inside_cone(double x_ba, double t_ba) {
  require_positive_time(t_ba);
  const double excess = std::fabs(x_ba) - t_ba;
  if (excess > 0.0) {
    if (excess > 8.0 * std::numeric_limits<double>::epsilon() * t_ba) return std::nullopt;
    x_ba = std::copysign(t_ba, x_ba);
  }
  return make(x_ba, t_ba);
}

SpacetimeInterval SpacetimeInterval::from_proper_length(double l, double t_ba) {
  require_positive_time(t_ba);
  if (!(l >= 0.0 && l <= t_ba)) {
    throw LightConeError("proper length must lie in [0, t]");
  }
  return SpacetimeInterval(std::sqrt((t_ba - l) * (t_ba + l)), t_ba, l);
}

}  // namespace checkerboard
