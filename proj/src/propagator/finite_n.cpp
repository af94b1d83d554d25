#include "checkerboard/propagator/finite_n.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "checkerboard/error.hpp"
#include "checkerboard/lattice/counts.hpp"
#include "checkerboard/lattice/oracle.hpp"
#include "checkerboard/numerics/binomial.hpp"

namespace checkerboard {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Terms smaller than e^-50 of the peak are dropped once past the peak.
constexpr double kLogCutoff = 50.0;

LatticePoint build(const SpacetimeInterval& iv, int n_steps, long long m) {
  const double dt = iv.t() / n_steps;
  const GridSpec grid = GridSpec::from_displacement(n_steps, static_cast<int>(m));
  const auto snapped = SpacetimeInterval::inside_cone(static_cast<double>(m) * dt, iv.t());
  return LatticePoint{grid, *snapped, dt};
}

void require_steps(int n_steps) {
  if (n_steps < 1) throw GridError("finite-N sum needs N >= 1");
}

// log of e^a - e^b for a >= b; -inf when they coincide.
double log_difference(double a, double b) {
  if (a == kNegInf) return kNegInf;
  if (b == kNegInf) return a;
  if (b >= a) return kNegInf;
  return a + std::log1p(-std::exp(b - a));
}

double log_first_count_float(Component c, int r, const GridSpec& g) {
  const double p = g.p();
  const double q = g.q();
  if (c == Component::PlusPlus) {
    const double hi = (r + 1) / 2;
    const double lo = (r - 1) / 2;
    return log_difference(log_binomial(p - 1, hi) + log_binomial(q - 1, lo),
                          log_binomial(p - 2, lo) + log_binomial(q, hi));
  }
  const double h = r / 2;
  return log_difference(log_binomial(p - 1, h) + log_binomial(q - 1, h),
                        log_binomial(p - 2, h - 1) + log_binomial(q, h + 1));
}

double log_full_count_float(Component c, int r, const GridSpec& g) {
  const double p = g.p();
  const double q = g.q();
  const int reversals = r + 1;
  switch (c) {
    case Component::PlusPlus: {
      const int j = reversals / 2;
      if (j == 0) return (q == 0 && p >= 1) ? 0.0 : kNegInf;
      return log_binomial(p - 1, j) + log_binomial(q - 1, j - 1);
    }
    case Component::MinusMinus: {
      const int j = reversals / 2;
      if (j == 0) return (p == 0 && q >= 1) ? 0.0 : kNegInf;
      return log_binomial(q - 1, j) + log_binomial(p - 1, j - 1);
    }
    default: {
      const int j = (reversals - 1) / 2;
      return log_binomial(p - 1, j) + log_binomial(q - 1, j);
    }
  }
}

}  // namespace

LatticePoint lattice_point(const SpacetimeInterval& iv, int n_steps) {
  require_steps(n_steps);
  const double m_real = n_steps * iv.x() / iv.t();
  const long long m = std::llround(m_real);
  if (std::fabs(m_real - static_cast<double>(m)) > 1e-9 * std::fmax(1.0, std::fabs(m_real)) ||
      (n_steps - m) % 2 != 0) {
    throw ParityError("interval is not on the N=" + std::to_string(n_steps) +
                      " lattice: M = N x/t = " + std::to_string(m_real) +
                      " must be an integer of N's parity");
  }
  return build(iv, n_steps, m);
}

LatticePoint snap_to_lattice(const SpacetimeInterval& iv, int n_steps) {
  require_steps(n_steps);
  const double m_real = n_steps * iv.x() / iv.t();
  long long lo = static_cast<long long>(std::floor(m_real));
  if ((n_steps - lo) % 2 != 0) --lo;
  long long m = (m_real - static_cast<double>(lo) <= 1.0) ? lo : lo + 2;
  if (m > n_steps) m -= 2;
  if (m < -n_steps) m += 2;
  return build(iv, n_steps, m);
}

Complex k_finite_n(Component component, const SpacetimeInterval& iv, int n_steps,
                   FiniteVariant variant) {
  const LatticePoint lp = lattice_point(iv, n_steps);
  const GridSpec& grid = lp.grid;
  const bool first = variant == FiniteVariant::First;
  if (first) {
    if (component != Component::PlusPlus && component != Component::PlusMinus) {
      throw DomainError("first-arrival sums exist for ++ and +- only");
    }
    if (grid.m() < 1) throw DomainError("first-arrival sums need x_BA > 0");
  }

  // R runs over one parity: odd for ++/--, even for +-/-+. First-arrival ++
  // starts at R = 1; full ++/-- include the light-cone path at R = -1.
  const bool same = component == Component::PlusPlus || component == Component::MinusMinus;
  const int r_start = same ? (first ? 1 : -1) : 0;
  const int r_end = n_steps;  // reversals <= N - 1

  std::map<int, PathCount> tallied;
  const bool use_oracle = !first && n_steps <= kMaxEnumerationSteps;
  if (use_oracle) {
    const CornerTally tally = enumerate_paths(grid, grid.m());
    const Sign alpha = departure_sign(component);
    const Sign beta = arrival_sign(component);
    for (const auto& [key, count] : tally.entries()) {
      if (key.alpha == alpha && key.beta == beta) tallied[key.reversals - 1] += count;
    }
  }
  const bool exact = n_steps <= kExactCountingMaxSteps;

  auto log_count = [&](int r) -> double {
    if (use_oracle) {
      const auto it = tallied.find(r);
      return it == tallied.end() ? kNegInf : it->second.log();
    }
    if (exact) return first ? phi_first(component, r, grid).log() : phi_full(component, r, grid).log();
    return first ? log_first_count_float(component, r, grid) : log_full_count_float(component, r, grid);
  };

  const double log_dt = std::log(lp.dt);
  long double re = 0.0L;
  long double im = 0.0L;
  double peak = kNegInf;
  int peak_r = r_start;
  for (int r = r_start; r <= r_end; r += 2) {
    const double lc = log_count(r);
    if (lc == kNegInf) {
      if (peak != kNegInf && r > peak_r) break;  // counts vanish for all larger R
      continue;
    }
    const double log_term = lc + r * log_dt;
    if (log_term > peak) {
      peak = log_term;
      peak_r = r;
    } else if (r > peak_r && log_term < peak - kLogCutoff) {
      break;
    }
    const long double term = std::exp(static_cast<long double>(log_term));
    // (i/2) i^R = i^(R+1)/2
    switch (((r + 1) % 4 + 4) % 4) {
      case 0: re += term; break;
      case 1: im += term; break;
      case 2: re -= term; break;
      default: im -= term; break;
    }
  }
  return {static_cast<double>(0.5L * re), static_cast<double>(0.5L * im)};
}

}  // namespace checkerboard
