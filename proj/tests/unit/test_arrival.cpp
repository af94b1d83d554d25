#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "checkerboard/arrival/amplitudes.hpp"
#include "checkerboard/arrival/decomposition.hpp"
#include "checkerboard/arrival/ratio.hpp"
#include "checkerboard/cli/presets.hpp"
#include "checkerboard/error.hpp"
#include "checkerboard/numerics/bessel.hpp"

using namespace checkerboard;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// A relativistic packet small enough for full decompositions in a test.
GaussianPacket toy_packet() { return GaussianPacket(-60.0, 6.0, 0.6, g_for_velocity(0.5)); }

}  // namespace

TEST_CASE("quadrature parameters") {
  CHECK_NOTHROW(QuadratureParams{}.validate());
  CHECK_THROWS_AS((QuadratureParams{20000, 8.0}.validate()), GridError);
  CHECK_THROWS_AS((QuadratureParams{3001, 8.0}.validate()), GridError);
  CHECK_NOTHROW((QuadratureParams{3201, 8.0}.validate()));
  CHECK_THROWS_AS((QuadratureParams{20001, 0.0}.validate()), GridError);
}

TEST_CASE("amplitudes vanish before the light cone reaches the packet") {
  const GaussianPacket p = toy_packet();
  const AmplitudeSet a = amplitudes_at(p, 0.0, 1.0);
  CHECK(a.a1_plus == Complex{});
  CHECK(a.a23_plus == Complex{});
  CHECK(a.a23_minus == Complex{});
  CHECK_THROWS_AS(amplitudes_at(p, 0.0, 0.0), DomainError);
}

TEST_CASE("split amplitudes add up to the direct full-propagator quadrature") {
  const GaussianPacket p = toy_packet();
  for (double T : {20.0, 70.0, 120.0, 250.0}) {
    const AmplitudeSet a = amplitudes_at(p, 0.0, T);
    const Spinor full = full_amplitudes_at(p, 0.0, T);
    CHECK(rel(a.full_plus(), full.plus) < 1e-10);
    CHECK(rel(a.full_minus(), full.minus) < 1e-10);
  }
  const cli::FigureSetup fig6 = cli::figure_preset("fig6");
  const GaussianPacket pf = fig6.packet();
  const AmplitudeSet a = amplitudes_at(pf, 0.0, fig6.t0_natural());
  const Spinor full = full_amplitudes_at(pf, 0.0, fig6.t0_natural());
  CHECK(rel(a.full_plus(), full.plus) < 1e-10);
  CHECK(rel(a.full_minus(), full.minus) < 1e-10);
}

TEST_CASE("figure-scale amplitudes") {
  const cli::FigureSetup fig6 = cli::figure_preset("fig6");
  const GaussianPacket p = fig6.packet();
  const double T = fig6.t0_natural();
  const AmplitudeSet a = amplitudes_at(p, 0.0, T);
  const double v = fig6.v_over_c();
  CHECK(std::abs(a.a1_plus) / std::abs(a.full_plus()) == doctest::Approx(2.0 * v).epsilon(0.05));

  QuadratureParams fine;
  fine.n_points = 2 * fine.n_points - 1;
  const AmplitudeSet b = amplitudes_at(p, 0.0, T, fine);
  CHECK(rel(a.a1_plus, b.a1_plus) < 1e-6);
  CHECK(rel(a.a23_plus, b.a23_plus) < 1e-6);
  CHECK(rel(a.a23_minus, b.a23_minus) < 1e-6);
}

TEST_CASE("near the light cone the reversal-free path cancels the Bessel kernels") {
  // Cone edge at the packet centre: the first-arrival amplitude is tiny
  // compared with the packet itself.
  const GaussianPacket p = toy_packet();
  const double edge = std::abs(p.psi0(p.x0()));
  const AmplitudeSet a = amplitudes_at(p, 0.0, -p.x0());
  CHECK(std::abs(a.a1_plus) < 0.1 * edge);
}

TEST_CASE("arrival decomposition invariants") {
  const GaussianPacket p = toy_packet();
  ArrivalOptions opt;
  opt.n_T = 64;
  opt.quad.n_points = 4001;
  const ArrivalDecomposition d = arrival_decomposition(p, 0.0, 400.0, opt);
  REQUIRE(d.T_grid.size() == 64);
  CHECK(d.T_grid.front() == doctest::Approx(400.0 / 64));
  CHECK(d.T_grid.back() == 400.0);
  CHECK(d.v_over_c == doctest::Approx(0.5));
  CHECK(trapezoid(d.T_grid, d.pi) == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 0; i < d.pi.size(); ++i) {
    CHECK(d.pi[i] >= 0.0);
    CHECK(d.pi_plus[i] >= 0.0);
    CHECK(d.pi_minus[i] >= 0.0);
    CHECK(d.pi[i] == doctest::Approx(d.pi_plus[i] + d.pi_minus[i]).epsilon(1e-15));
    if (d.pi[i] > 1e-300) {
      CHECK(std::fabs(d.pi1[i] + d.pi23[i] + d.pi_cross[i] - d.pi[i]) <= 1e-10 * d.pi[i]);
    }
  }

  const ArrivalDecomposition serial =
      arrival_decomposition(p, 0.0, 400.0, opt, Execution::Serial);
  CHECK(serial.pi == d.pi);
  CHECK(serial.pi_cross == d.pi_cross);
  CHECK(serial.C == d.C);

  opt.n_T = 15;
  CHECK_THROWS_AS(arrival_decomposition(p, 0.0, 400.0, opt), GridError);
  opt.n_T = 16;
  CHECK_THROWS_AS(arrival_decomposition(p, 0.0, -1.0, opt), DomainError);
}

TEST_CASE("normalization refinement warning") {
  const GaussianPacket p = toy_packet();
  ArrivalOptions opt;
  opt.quad.n_points = 4001;
  opt.n_T = 16;
  // 16 points across the whole arrival peak cannot fix the normalization.
  CHECK_FALSE(arrival_decomposition(p, 0.0, 400.0, opt).warnings.empty());
  opt.n_T = 800;
  CHECK(arrival_decomposition(p, 0.0, 400.0, opt).warnings.empty());
}

TEST_CASE("scaling estimates") {
  const ScalingEstimates s = scaling_estimates(3.862e-3);
  CHECK(s.first == doctest::Approx(2.983e-5).epsilon(2e-4));
  CHECK(s.cross == doctest::Approx(7.724e-3).epsilon(1e-12));
  const ScalingEstimates h = scaling_estimates(0.5);
  CHECK(h.first == 0.5);
  CHECK(h.cross == 1.0);
  CHECK(s.first / s.cross == doctest::Approx(3.862e-3));
  CHECK_THROWS_AS(scaling_estimates(0.0), DomainError);
  CHECK_THROWS_AS(scaling_estimates(1.0), DomainError);
}

TEST_CASE("first-to-full ratios") {
  auto at = [](double v, double z) {
    const double t = z / std::sqrt(1.0 - v * v);
    return ratio_first_to_full(make_interval(v * t, t));
  };
  const auto near_c = at(1.0 - 1e-9, 50.0);
  CHECK(near_c.exact_pp == doctest::Approx(1.0).epsilon(1e-8));
  const auto r = at(0.25, 20.0);
  CHECK(r.exact_pp == doctest::Approx(0.4));
  CHECK(r.exact_mm == doctest::Approx(2.0 / 3.0));
  const BesselJ012 j = bessel_j012(20.0);
  CHECK(r.exact_pm == doctest::Approx((j.j0 + 0.6 * j.j2) / j.j0).epsilon(1e-13));
  CHECK(std::isnan(at(0.25, 5.0).asymptotic_pm));

  // Away from the zeros of J0 the two-term forms reproduce the exact ratio.
  for (double v : {0.01, 0.3, 0.7}) {
    for (double z = 1e3; z <= 1e6; z *= 1.37) {
      const auto q = at(v, z);
      if (std::fabs(bessel_j(0, z)) < 1e-3) continue;
      CHECK(q.asymptotic_pm == doctest::Approx(q.exact_pm).epsilon(1e-2));
    }
  }
  // and for v << c they sit near 2v/c.
  int near = 0;
  int total = 0;
  for (double z = 1e5; z <= 1e6; z *= 1.0123) {
    const auto q = at(0.01, z);
    ++total;
    if (std::fabs(q.asymptotic_pm - 0.02) < 0.02 * 0.05) ++near;
  }
  CHECK(near > 0.9 * total);

  CHECK(at(0.5, 2.404825557695773).near_singular);
  CHECK_FALSE(at(0.5, 3.0).near_singular);
  CHECK_THROWS_AS(ratio_first_to_full(make_interval(0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(ratio_first_to_full(make_interval(1.0, 1.0)), DomainError);
}

TEST_CASE("interference dominates first arrivals by about c/v at figure scale") {
  const cli::FigureSetup fig6 = cli::figure_preset("fig6");
  ArrivalOptions opt;
  opt.n_T = 100;
  opt.check_refinement = false;
  const ArrivalDecomposition d =
      arrival_decomposition(fig6.packet(), 0.0, fig6.t_max_natural(), opt);
  const double ratio = *std::max_element(d.pi_cross.begin(), d.pi_cross.end()) /
                       *std::max_element(d.pi1.begin(), d.pi1.end());
  const double c_over_v = 1.0 / fig6.v_over_c();
  CHECK(ratio > c_over_v / 3.0);
  CHECK(ratio < c_over_v * 3.0);
}
