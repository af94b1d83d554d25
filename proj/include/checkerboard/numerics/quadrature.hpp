#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>

#include "checkerboard/component.hpp"
#include "checkerboard/error.hpp"

namespace checkerboard {

inline void validate_simpson_grid(double a, double b, std::size_t n_points) {
  if (n_points < 3 || n_points % 2 == 0) {
    throw GridError("Simpson quadrature needs an odd point count >= 3, got " +
                    std::to_string(n_points));
  }
  if (!(a <= b)) {
    throw GridError("Simpson quadrature needs a <= b");
  }
}

// Composite Simpson rule on n_points equally spaced nodes (n_points odd,
// >= 3). Exact for cubics on every panel. The integrand may return any value
// type with +=, + and scaling by double (several amplitudes can share one
// pass). Summation order is fixed, so results are reproducible bit for bit.
template <class F>
auto integrate_simpson(F&& f, double a, double b, std::size_t n_points) {
  using R = std::decay_t<decltype(f(a))>;
  validate_simpson_grid(a, b, n_points);
  if (a == b) return R{};
  const std::size_t panels = n_points - 1;
  const double h = (b - a) / static_cast<double>(panels);
  R ends = f(a);
  ends += f(b);
  R odd{};
  R even{};
  for (std::size_t i = 1; i < panels; ++i) {
    const double x = a + static_cast<double>(i) * h;
    if (i % 2 == 1) {
      odd += f(x);
    } else {
      even += f(x);
    }
  }
  R total = ends;
  total += odd * 4.0;
  total += even * 2.0;
  return total * (h / 3.0);
}

template <class F>
Complex integrate_complex(F&& f, double a, double b, std::size_t n_points) {
  return integrate_simpson(std::forward<F>(f), a, b, n_points);
}

}  // namespace checkerboard
