#pragma once

#include "checkerboard/component.hpp"
#include "checkerboard/lattice/grid.hpp"
#include "checkerboard/propagator/interval.hpp"

namespace checkerboard {

enum class FiniteVariant { First, Full };

// N equal steps of dt = t/N between A and B, with P right and Q left steps.
struct LatticePoint {
  GridSpec grid;
  SpacetimeInterval interval;  // x = M dt exactly
  double dt;
};

// The lattice for an interval whose displacement is a whole number of steps
// of N's parity. Throws ParityError otherwise.
LatticePoint lattice_point(const SpacetimeInterval& iv, int n_steps);

// Moves x to the nearest admissible lattice displacement M dt.
LatticePoint snap_to_lattice(const SpacetimeInterval& iv, int n_steps);

// Above this N the exact big-integer counts are replaced by lgamma.
inline constexpr int kExactCountingMaxSteps = 1'000'000;

// Finite-N checkerboard sum (i/2) sum_R Phi(R) (i dt)^R, with R the number of
// reversals minus one. First: ++ and +- only, first-arrival counts. Full: any
// component, oracle tallies for N <= 24 and run-decomposition counts beyond.
// Terms are formed in log space; the sum stops once terms past the peak fall
// below e^-50 of the largest.
Complex k_finite_n(Component component, const SpacetimeInterval& iv, int n_steps,
                   FiniteVariant variant);

}  // namespace checkerboard
