#pragma once

#include "checkerboard/component.hpp"
#include "checkerboard/lattice/grid.hpp"
#include "checkerboard/numerics/binomial.hpp"

// Closed-form corner counts on the rotated lattice. A right x-step is a
// (1,0) move and a left x-step a (0,1) move. An l-corner is entered by (1,0)
// and left by (0,1); an r-corner is the reverse.

namespace checkerboard {

// Unrestricted monotone paths spanning du x dv with r_l l-corners:
// C(du, r_l) C(dv, r_l). Requires du, dv >= 0.
PathCount phi_l_wr(int r_l, int du, int dv);

// Same with r-corners.
PathCount phi_r_wr(int r_r, int du, int dv);

// Paths (a,0) -> (b,b) that never enter u > v, binned by l-corners:
//   C(b-a, r) C(b, r) - C(b-a-1, r-1) C(b+1, r+1).
// Requires a <= 0 <= b (the start must itself be admissible).
PathCount phi_l_restricted(int r_l, int a, int b);

// The same paths binned by r-corners:
//   C(b-a, r) C(b, r) - C(b-a+1, r) C(b-1, r).
PathCount phi_r_restricted(int r_r, int a, int b);

// Number of first-arrival paths of component ++ (odd R >= 1) or +- (even
// R >= 0) on the grid, where R is the number of reversals of the full path
// minus one. Throws ParityError for the wrong parity of R and DomainError
// for components other than ++ and +-.
PathCount phi_first(Component beta_alpha, int r, const GridSpec& grid);

// Number of all (first and later arrival) paths of a component with R + 1
// reversals, from the run decomposition of the path:
//   ++ : C(P-1, j) C(Q-1, j-1), R + 1 = 2j
//   -- : C(Q-1, j) C(P-1, j-1), R + 1 = 2j
//   +-, -+ : C(P-1, j) C(Q-1, j), R + 1 = 2j + 1
// The reversal-free light-cone path (R = -1) is included.
PathCount phi_full(Component beta_alpha, int r, const GridSpec& grid);

}  // namespace checkerboard
