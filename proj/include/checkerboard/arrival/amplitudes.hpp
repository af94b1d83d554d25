#pragma once

#include <cstddef>

#include "checkerboard/component.hpp"
#include "checkerboard/wavepacket/packet.hpp"

namespace checkerboard {

// x_A quadrature over the packet window [x0 - w dx, x0 + w dx] cut to the
// backward light cone [X - cT, X] of the arrival point.
struct QuadratureParams {
  std::size_t n_points = 20001;  // Simpson nodes, odd
  double truncation = 8.0;       // w, in units of dx

  // The integrand turns ~25 rad per dx at figure scale; fewer than this many
  // nodes per dx across the full window is rejected.
  static constexpr double kMinPointsPerDx = 200.0;

  // Throws GridError for an even or too small point count, or w <= 0.
  void validate() const;
};

// Amplitudes at (X, T) split by arrival history:
//   a1_plus   first arrivals at X with velocity +c (including the
//             reversal-free light-cone path)
//   a23_plus  later arrivals with velocity +c
//   a23_minus arrivals with velocity -c (always later arrivals)
struct AmplitudeSet {
  Complex a1_plus;
  Complex a23_plus;
  Complex a23_minus;

  Complex full_plus() const { return a1_plus + a23_plus; }
  Complex full_minus() const { return a23_minus; }

  AmplitudeSet& operator+=(const AmplitudeSet& o) {
    a1_plus += o.a1_plus;
    a23_plus += o.a23_plus;
    a23_minus += o.a23_minus;
    return *this;
  }
  friend AmplitudeSet operator*(AmplitudeSet s, double k) {
    s.a1_plus *= k;
    s.a23_plus *= k;
    s.a23_minus *= k;
    return s;
  }
};

// Requires T > 0 (DomainError). Zero amplitudes when the light cone misses
// the packet window. Initial-state support with x_A > X is outside the model
// and is cut off.
AmplitudeSet amplitudes_at(const GaussianPacket& p, double X, double T,
                           const QuadratureParams& quad = {});

// Psi+(X, T) and Psi-(X, T) by direct quadrature of the full propagator,
// without the first/later split.
Spinor full_amplitudes_at(const GaussianPacket& p, double X, double T,
                          const QuadratureParams& quad = {});

}  // namespace checkerboard
