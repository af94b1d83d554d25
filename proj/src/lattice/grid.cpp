#include "checkerboard/lattice/grid.hpp"

#include <cstdlib>

#include "checkerboard/error.hpp"

namespace checkerboard {

GridSpec GridSpec::from_steps(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) {
    throw GridError("grid needs P >= 0, Q >= 0 and N = P + Q >= 1, got P=" +
                    std::to_string(p) + " Q=" + std::to_string(q));
  }
  return GridSpec(p, q);
}

GridSpec GridSpec::from_displacement(int n, int m) {
  if (n < 1 || std::abs(m) > n) {
    throw GridError("grid needs N >= 1 and |M| <= N, got N=" + std::to_string(n) +
                    " M=" + std::to_string(m));
  }
  if ((n - m) % 2 != 0) {
    throw ParityError("N and M must share parity, got N=" + std::to_string(n) +
                      " M=" + std::to_string(m));
  }
  return GridSpec((n + m) / 2, (n - m) / 2);
}

std::string GridSpec::str() const {
  return "N=" + std::to_string(n()) + " P=" + std::to_string(p_) + " Q=" + std::to_string(q_) +
         " M=" + std::to_string(m());
}

}  // namespace checkerboard
