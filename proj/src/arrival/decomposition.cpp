#include "checkerboard/arrival/decomposition.hpp"

#include <cmath>
#include <cstdio>

#include "checkerboard/error.hpp"

namespace checkerboard {
namespace {

struct Sample {
  double rho_plus = 0.0;
  double rho_minus = 0.0;
  double first = 0.0;
  double later = 0.0;
  double cross = 0.0;
};

Sample sample(const GaussianPacket& p, double X, double T, const QuadratureParams& quad) {
  const AmplitudeSet a = amplitudes_at(p, X, T, quad);
  return {std::norm(a.full_plus()), std::norm(a.full_minus()), std::norm(a.a1_plus),
          std::norm(a.a23_plus) + std::norm(a.a23_minus),
          2.0 * std::real(std::conj(a.a1_plus) * a.a23_plus)};
}

double midpoint_rho(const GaussianPacket& p, double X, double T, const QuadratureParams& quad) {
  const AmplitudeSet a = amplitudes_at(p, X, T, quad);
  return std::norm(a.full_plus()) + std::norm(a.full_minus());
}

// Every grid point writes only its own slot, so the parallel loop produces
// the serial result exactly.
template <class F>
void for_each_index(std::size_t n, Execution execution, F&& f) {
  const long long count = static_cast<long long>(n);
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
  }
}

}  // namespace

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw GridError("trapezoid: x and y differ in length");
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return s;
}

ArrivalDecomposition arrival_decomposition(const GaussianPacket& p, double X, double T_max,
                                           const ArrivalOptions& options, Execution execution) {
  if (options.n_T < 16) throw GridError("arrival_decomposition needs n_T >= 16");
  if (!(T_max > 0.0)) throw DomainError("T_max must be positive");
  options.quad.validate();

  const std::size_t n = options.n_T;
  ArrivalDecomposition d;
  d.X = X;
  d.T_max = T_max;
  d.v_over_c = p.velocity();
  d.T_grid.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.T_grid[i] = T_max * static_cast<double>(i + 1) / static_cast<double>(n);
  }

  std::vector<Sample> samples(n);
  for_each_index(n, execution,
                 [&](std::size_t i) { samples[i] = sample(p, X, d.T_grid[i], options.quad); });

  std::vector<double> rho(n);
  for (std::size_t i = 0; i < n; ++i) rho[i] = samples[i].rho_plus + samples[i].rho_minus;
  const double norm = trapezoid(d.T_grid, rho);
  if (!(norm > 0.0)) {
    throw DomainError("rho(X, T) vanishes on the whole T grid; the packet never reaches X");
  }
  d.C = 1.0 / norm;

  d.pi.resize(n);
  d.pi_plus.resize(n);
  d.pi_minus.resize(n);
  d.pi1.resize(n);
  d.pi23.resize(n);
  d.pi_cross.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Sample& s = samples[i];
    d.pi_plus[i] = d.C * s.rho_plus;
    d.pi_minus[i] = d.C * s.rho_minus;
    d.pi[i] = d.pi_plus[i] + d.pi_minus[i];
    d.pi1[i] = d.C * s.first;
    d.pi23[i] = d.C * s.later;
    d.pi_cross[i] = d.C * s.cross;
  }

  if (options.check_refinement) {
    // Interleave midpoints into the grid and redo the trapezoid.
    std::vector<double> mid(n);
    for_each_index(n - 1, execution, [&](std::size_t i) {
      mid[i + 1] = midpoint_rho(p, X, 0.5 * (d.T_grid[i] + d.T_grid[i + 1]), options.quad);
    });
    std::vector<double> t2;
    std::vector<double> r2;
    t2.reserve(2 * n);
    r2.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) {
        t2.push_back(0.5 * (d.T_grid[i - 1] + d.T_grid[i]));
        r2.push_back(mid[i]);
      }
      t2.push_back(d.T_grid[i]);
      r2.push_back(rho[i]);
    }
    const double shift = std::fabs(trapezoid(t2, r2) / norm - 1.0);
    if (shift > ArrivalOptions::kRefinementTolerance) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "normalization moves by %.3e under T-grid doubling (tolerance %.0e)", shift,
                    ArrivalOptions::kRefinementTolerance);
      d.warnings.emplace_back(buf);
    }
  }
  return d;
}

}  // namespace checkerboard
