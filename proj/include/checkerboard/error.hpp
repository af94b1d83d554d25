#pragma once

#include <stdexcept>

namespace checkerboard {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Reversal count or lattice displacement has the wrong parity.
class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed sampling grid (quadrature points, T grid, lattice grid).
class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Spacetime interval outside the light cone or with nonpositive time.
class LightConeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive enumeration requested beyond its size cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace checkerboard
