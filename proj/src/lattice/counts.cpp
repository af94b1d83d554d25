#include "checkerboard/lattice/counts.hpp"

#include <string>

#include "checkerboard/error.hpp"

namespace checkerboard {
namespace {

void require_span(int du, int dv) {
  if (du < 0 || dv < 0) {
    throw DomainError("lattice span must be nonnegative, got du=" + std::to_string(du) +
                      " dv=" + std::to_string(dv));
  }
}

void require_restricted_endpoints(int a, int b) {
  if (a > 0 || b < 0) {
    throw DomainError("restricted counts need a <= 0 <= b, got a=" + std::to_string(a) +
                      " b=" + std::to_string(b));
  }
}

void require_arrival_from_left(const GridSpec& grid) {
  if (grid.m() < 1) {
    throw DomainError("first arrivals from the left need M >= 1, got " + grid.str());
  }
}

}  // namespace

PathCount phi_l_wr(int r_l, int du, int dv) {
  require_span(du, dv);
  return PathCount(binomial_int(du, r_l) * binomial_int(dv, r_l));
}

PathCount phi_r_wr(int r_r, int du, int dv) {
  require_span(du, dv);
  return PathCount(binomial_int(du, r_r) * binomial_int(dv, r_r));
}

PathCount phi_l_restricted(int r_l, int a, int b) {
  require_restricted_endpoints(a, b);
  return PathCount(binomial_int(b - a, r_l) * binomial_int(b, r_l) -
                   binomial_int(b - a - 1, r_l - 1) * binomial_int(b + 1, r_l + 1));
}

PathCount phi_r_restricted(int r_r, int a, int b) {
  require_restricted_endpoints(a, b);
  return PathCount(binomial_int(b - a, r_r) * binomial_int(b, r_r) -
                   binomial_int(b - a + 1, r_r) * binomial_int(b - 1, r_r));
}

PathCount phi_first(Component beta_alpha, int r, const GridSpec& grid) {
  require_arrival_from_left(grid);
  const int p = grid.p();
  const int q = grid.q();
  switch (beta_alpha) {
    case Component::PlusPlus: {
      if (r % 2 == 0) throw ParityError("++ first-arrival counts need odd R");
      if (r < 1) throw DomainError("++ first-arrival counts need R >= 1");
      const int hi = (r + 1) / 2;
      const int lo = (r - 1) / 2;
      return PathCount(binomial_int(p - 1, hi) * binomial_int(q - 1, lo) -
                       binomial_int(p - 2, lo) * binomial_int(q, hi));
    }
    case Component::PlusMinus: {
      if (r % 2 != 0) throw ParityError("+- first-arrival counts need even R");
      if (r < 0) throw DomainError("+- first-arrival counts need R >= 0");
      const int h = r / 2;
      return PathCount(binomial_int(p - 1, h) * binomial_int(q - 1, h) -
                       binomial_int(p - 2, h - 1) * binomial_int(q, h + 1));
    }
    default:
      throw DomainError("first arrivals from the left only exist for ++ and +-, not " +
                        std::string(to_string(beta_alpha)));
  }
}

PathCount phi_full(Component beta_alpha, int r, const GridSpec& grid) {
  const int p = grid.p();
  const int q = grid.q();
  const int reversals = r + 1;
  if (reversals < 0) throw DomainError("R must be >= -1");
  const bool same_direction =
      beta_alpha == Component::PlusPlus || beta_alpha == Component::MinusMinus;
  if (same_direction != (reversals % 2 == 0)) {
    throw ParityError("R + 1 must be even for ++/-- and odd for +-/-+, got R=" +
                      std::to_string(r) + " for " + std::string(to_string(beta_alpha)));
  }
  switch (beta_alpha) {
    case Component::PlusPlus: {
      const int j = reversals / 2;
      if (j == 0) return PathCount(q == 0 && p >= 1 ? 1u : 0u);
      return PathCount(binomial_int(p - 1, j) * binomial_int(q - 1, j - 1));
    }
    case Component::MinusMinus: {
      const int j = reversals / 2;
      if (j == 0) return PathCount(p == 0 && q >= 1 ? 1u : 0u);
      return PathCount(binomial_int(q - 1, j) * binomial_int(p - 1, j - 1));
    }
    default: {
      const int j = (reversals - 1) / 2;
      return PathCount(binomial_int(p - 1, j) * binomial_int(q - 1, j));
    }
  }
}

}  // namespace checkerboard
