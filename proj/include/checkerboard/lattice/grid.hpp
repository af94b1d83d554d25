#pragma once

#include <string>

namespace checkerboard {

// An N-step checkerboard path with P right steps and Q left steps ends
// M = P - Q lattice units from its start.
class GridSpec {
 public:
  // Throws GridError unless p >= 0 and q >= 0.
  static GridSpec from_steps(int p, int q);
  // Throws GridError/ParityError unless |m| <= n and n, m share parity.
  static GridSpec from_displacement(int n, int m);

  int n() const { return p_ + q_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int m() const { return p_ - q_; }

  std::string str() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  GridSpec(int p, int q) : p_(p), q_(q) {}
  int p_;
  int q_;
};

}  // namespace checkerboard
