#include "checkerboard/arrival/amplitudes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "checkerboard/error.hpp"
#include "checkerboard/numerics/quadrature.hpp"
#include "checkerboard/propagator/interval.hpp"
#include "checkerboard/propagator/propagator.hpp"

namespace checkerboard {
namespace {

constexpr Complex kI{0.0, 1.0};

// Largest phase advance of the integrand between neighbouring nodes, in
// either integration variable.
constexpr double kMaxPhasePerNode = 0.25;

// Near the cone the Bessel phase turns at dl/dx_A = x/l per unit x_A, which
// no fixed x_A grid resolves as l -> 0. Where x/l exceeds kappa the integral
// is done in l instead (dx_A = (l/x) dl), where the integrand turns about once
// per unit l. kappa is the largest ratio the x_A grid still resolves.
//
// F(x_A, interval) returns the integrand value.
template <class F>
auto cone_quadrature(const GaussianPacket& p, double X, double T, const QuadratureParams& quad,
                     F&& integrand) {
  using R = std::decay_t<decltype(integrand(0.0, SpacetimeInterval::make(0.0, 1.0)))>;
  quad.validate();
  if (!(T > 0.0)) throw DomainError("arrival time T must be positive");
  const double half = quad.truncation * p.dx();
  const double lo = std::max(X - T, p.x0() - half);
  const double hi = std::min(X, p.x0() + half);
  R total{};
  if (!(lo < hi)) return total;

  const double h = 2.0 * half / static_cast<double>(quad.n_points - 1);
  const double kappa = std::max(kMaxPhasePerNode / h - std::fabs(p.k0()), 1e-3);
  // x/l = kappa at x = x_split.
  const double x_split = T * kappa / std::sqrt(1.0 + kappa * kappa);
  const double split = std::clamp(X - x_split, lo, hi);

  if (split > lo) {
    const auto l_of = [&](double xa) {
      const double x = std::min(X - xa, T);
      return std::sqrt((T - x) * (T + x));
    };
    const double l_lo = l_of(lo);
    const double l_hi = l_of(split);
    std::size_t n = static_cast<std::size_t>(std::ceil((l_hi - l_lo) / kMaxPhasePerNode)) + 1;
    n = std::max<std::size_t>(n, 3);
    if (n % 2 == 0) ++n;
    total += integrate_simpson(
        [&](double l) -> R {
          const SpacetimeInterval iv = SpacetimeInterval::from_proper_length(l, T);
          // dx_A/dl = l/x; x > 0 on this side of the split.
          return integrand(X - iv.x(), iv) * (l / iv.x());
        },
        l_lo, l_hi, n);
  }
  if (hi > split) {
    total += integrate_simpson(
        [&](double xa) -> R {
          const auto iv = SpacetimeInterval::inside_cone(X - xa, T);
          if (!iv) return R{};
          return integrand(xa, *iv);
        },
        split, hi, quad.n_points);
  }
  return total;
}

// The reversal-free path carries Psi+ unchanged along the light cone. The
// Bessel kernels integrate to about -Psi+ over the first few l near the cone,
// so for smooth packets the two nearly cancel.
Complex light_cone_term(const GaussianPacket& p, double X, double T, const QuadratureParams& quad) {
  const double xa = X - T;
  const double half = quad.truncation * p.dx();
  if (xa < p.x0() - half || xa > std::min(X, p.x0() + half)) return {0.0, 0.0};
  return initial_spinor(p, xa).plus;
}

struct SpinorSum {
  Complex plus;
  Complex minus;
  SpinorSum& operator+=(const SpinorSum& o) {
    plus += o.plus;
    minus += o.minus;
    return *this;
  }
  friend SpinorSum operator*(SpinorSum s, double k) {
    s.plus *= k;
    s.minus *= k;
    return s;
  }
};

}  // namespace

void QuadratureParams::validate() const {
  if (!(truncation > 0.0)) throw GridError("packet truncation must be positive");
  validate_simpson_grid(0.0, 1.0, n_points);
  const double per_dx = static_cast<double>(n_points - 1) / (2.0 * truncation);
  if (per_dx < kMinPointsPerDx) {
    throw GridError("x_A quadrature resolves " + std::to_string(per_dx) +
                    " points per dx; at least 200 are required");
  }
}

AmplitudeSet amplitudes_at(const GaussianPacket& p, double X, double T,
                           const QuadratureParams& quad) {
  AmplitudeSet out = cone_quadrature(p, X, T, quad, [&](double xa, const SpacetimeInterval& iv) {
    const KernelSet k = evaluate_kernels(iv);
    const Spinor s = initial_spinor(p, xa);
    return AmplitudeSet{k.k1_pp * s.plus + kI * k.k1_pm_imag * s.minus,
                        k.k23_pp * s.plus + kI * k.k23_pm_imag * s.minus,
                        kI * k.k_pm_imag * s.plus + k.k_mm * s.minus};
  });
  out.a1_plus += light_cone_term(p, X, T, quad);
  return out;
}

Spinor full_amplitudes_at(const GaussianPacket& p, double X, double T,
                          const QuadratureParams& quad) {
  const SpinorSum sum =
      cone_quadrature(p, X, T, quad, [&](double xa, const SpacetimeInterval& iv) {
        const Spinor s = initial_spinor(p, xa);
        return SpinorSum{
            k_full(Component::PlusPlus, iv) * s.plus + k_full(Component::PlusMinus, iv) * s.minus,
            k_full(Component::MinusPlus, iv) * s.plus +
                k_full(Component::MinusMinus, iv) * s.minus};
      });
  return {sum.plus + light_cone_term(p, X, T, quad), sum.minus};
}

}  // namespace checkerboard
