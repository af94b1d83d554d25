#include "checkerboard/propagator/propagator.hpp"

#include <string>

#include "checkerboard/error.hpp"
#include "checkerboard/numerics/bessel.hpp"

namespace checkerboard {
namespace {

void require_arrival_from_left(const SpacetimeInterval& iv) {
  if (!(iv.x() > 0.0)) {
    throw DomainError("first/later-arrival split needs x_BA > 0, got " + std::to_string(iv.x()));
  }
}

}  // namespace

KernelSet evaluate_kernels(const SpacetimeInterval& iv) {
  if (iv.x() < 0.0) throw DomainError("kernel set needs x_BA >= 0");
  const double x = iv.x();
  const double t = iv.t();
  const double l = iv.l();
  const BesselJ012 j = bessel_j012(l);
  const double j1_over_l = l < kBesselSeriesCutoff ? bessel_j1_over_z(l) : j.j1 / l;
  const double factor = iv.velocity_factor();

  KernelSet k{};
  k.k_pp = -0.5 * (t + x) * j1_over_l;
  k.k_mm = -0.5 * (t - x) * j1_over_l;
  k.k_pm_imag = 0.5 * j.j0;
  k.k1_pp = -x * j1_over_l;
  k.k1_pm_imag = 0.5 * (j.j0 + factor * j.j2);
  k.k23_pp = k.k_mm;
  k.k23_pm_imag = -0.5 * factor * j.j2;
  return k;
}

Complex k_full(Component component, const SpacetimeInterval& iv) {
  const double l = iv.l();
  switch (component) {
    case Component::PlusPlus: return {-0.5 * (iv.t() + iv.x()) * bessel_j1_over_z(l), 0.0};
    case Component::MinusMinus: return {-0.5 * (iv.t() - iv.x()) * bessel_j1_over_z(l), 0.0};
    default: return {0.0, 0.5 * bessel_j(0, l)};
  }
}

Complex k_first(Component component, const SpacetimeInterval& iv) {
  require_arrival_from_left(iv);
  const double l = iv.l();
  switch (component) {
    case Component::PlusPlus: return {-iv.x() * bessel_j1_over_z(l), 0.0};
    case Component::PlusMinus:
      return {0.0, 0.5 * (bessel_j(0, l) + iv.velocity_factor() * bessel_j(2, l))};
    default: return {0.0, 0.0};
  }
}

Complex k_later(Component component, const SpacetimeInterval& iv) {
  require_arrival_from_left(iv);
  switch (component) {
    case Component::PlusPlus: return k_full(Component::MinusMinus, iv);
    case Component::PlusMinus:
      return {0.0, -0.5 * iv.velocity_factor() * bessel_j(2, iv.l())};
    default: return k_full(component, iv);
  }
}

}  // namespace checkerboard
