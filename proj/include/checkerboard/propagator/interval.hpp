#pragma once

#include <optional>

namespace checkerboard {

// Kinematics of the pair A -> B, natural units. Only constructed inside or
// on the light cone |x| <= t with t > 0.
class SpacetimeInterval {
 public:
  // Throws LightConeError if t <= 0 or |x| > t.
  static SpacetimeInterval make(double x_ba, double t_ba);

  // Quadrature form: nullopt outside the cone instead of an error. Points
  // within a few ulp outside the cone (rounding at the window edge) are put
  // on the cone. Still throws for t <= 0.
  static std::optional<SpacetimeInterval> inside_cone(double x_ba, double t_ba);

  // The interval with x >= 0 and proper length l, keeping l exact (x is the
  // derived quantity). Used where l is the integration variable near the
  // cone. Throws LightConeError unless t > 0 and 0 <= l <= t.
  static SpacetimeInterval from_proper_length(double l, double t_ba);

  double x() const { return x_; }
  double t() const { return t_; }
  double v() const { return x_ / t_; }
  double tau() const { return l_; }  // proper time (c = 1)
  double l() const { return l_; }    // c * tau
  double r0() const { return l_; }   // l / lambda_c, dominant reversal number

  // (c - v)/(c + v) = (t - x)/(t + x); 0 for x = t, unbounded for x = -t.
  double velocity_factor() const { return (t_ - x_) / (t_ + x_); }

 private:
  SpacetimeInterval(double x, double t, double l) : x_(x), t_(t), l_(l) {}
  double x_;
  double t_;
  double l_;
};

inline SpacetimeInterval make_interval(double x_ba, double t_ba) {
  return SpacetimeInterval::make(x_ba, t_ba);
}

}  // namespace checkerboard
