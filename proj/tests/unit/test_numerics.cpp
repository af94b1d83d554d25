#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "checkerboard/error.hpp"
#include "checkerboard/numerics/bessel.hpp"
#include "checkerboard/numerics/binomial.hpp"
#include "checkerboard/numerics/quadrature.hpp"

using namespace checkerboard;

namespace {

// Scale against which Bessel errors are judged: the function itself, or its
// oscillation envelope where it passes through zero.
double envelope(double j, double z) {
  const double env = z > 0.0 ? std::min(1.0, std::sqrt(2.0 / (std::numbers::pi * z))) : 1.0;
  return std::max(std::fabs(j), env);
}

std::vector<double> log_samples(double lo, double hi, int n) {
  std::vector<double> z(n);
  for (int i = 0; i < n; ++i) z[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return z;
}

}  // namespace

TEST_CASE("binomial small cases and convention") {
  CHECK(binomial(5, 2) == PathCount(10));
  for (int n = 0; n < 20; ++n) CHECK(binomial(n, 0) == PathCount(1));
  CHECK(binomial(3, -1).is_zero());
  CHECK(binomial(3, 4).is_zero());
  CHECK(binomial(-1, 0).is_zero());
  CHECK(binomial_int(-2, 1) == 0);
}

TEST_CASE("binomial satisfies Pascal's rule up to n = 200") {
  for (int n = 1; n <= 200; ++n) {
    for (int k = 0; k <= n; ++k) {
      REQUIRE(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
    }
  }
}

TEST_CASE("binomial(64, 32) matches a Pascal-triangle table") {
  std::vector<std::vector<BigInt>> row(65);
  for (int n = 0; n <= 64; ++n) {
    row[n].assign(n + 1, BigInt(1));
    for (int k = 1; k < n; ++k) row[n][k] = row[n - 1][k - 1] + row[n - 1][k];
  }
  CHECK(binomial(64, 32).value() == row[64][32]);
  CHECK(binomial(64, 32).str() == "1832624140942590534");
}

TEST_CASE("PathCount rejects negative values and orders like integers") {
  CHECK_THROWS_AS(PathCount(BigInt(-1)), DomainError);
  CHECK(PathCount(3) < PathCount(4));
  CHECK(PathCount(7) * PathCount(6) == PathCount(42));
}

TEST_CASE("PathCount::log is accurate far beyond double range") {
  CHECK(PathCount(0).log() == -std::numeric_limits<double>::infinity());
  CHECK(PathCount(1).log() == 0.0);
  CHECK(PathCount(1000).log() == doctest::Approx(std::log(1000.0)).epsilon(1e-15));
  // C(4000, 2000) ~ 1e1202.
  const double expected = std::lgamma(4001.0) - 2.0 * std::lgamma(2001.0);
  CHECK(binomial(4000, 2000).log() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("log_binomial agrees with exact logs") {
  for (int n = 0; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) {
      REQUIRE(log_binomial(n, k) == doctest::Approx(binomial(n, k).log()).epsilon(1e-12));
    }
  }
  CHECK(log_binomial(3, 5) == -std::numeric_limits<double>::infinity());
  CHECK(log_binomial(3, -1) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("Bessel values at the origin") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(bessel_j(2, 0.0) == 0.0);
  CHECK(bessel_j1_over_z(0.0) == 0.5);
  CHECK(bessel_j1_over_z(1e-9) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(bessel_j(1, 1e-6) / 1e-6 == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("Bessel domain") {
  CHECK_THROWS_AS(bessel_j(0, -1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(3, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(0, 2e9), DomainError);
  CHECK_THROWS_AS(bessel_j_hankel2(0, 9.0), DomainError);
  CHECK_THROWS_AS(bessel_j_hankel2(1, 20.0), DomainError);
}

TEST_CASE("J0(10) against a 60-term series in 50-digit arithmetic") {
  using boost::multiprecision::cpp_bin_float_50;
  for (int order = 0; order <= 2; ++order) {
    const cpp_bin_float_50 half_z = 5;
    cpp_bin_float_50 term = 1;
    for (int i = 1; i <= order; ++i) term *= half_z / i;
    cpp_bin_float_50 sum = 0;
    for (int k = 0; k < 60; ++k) {
      sum += term;
      term *= -(half_z * half_z) / (cpp_bin_float_50(k + 1) * (k + 1 + order));
    }
    CHECK(bessel_j(order, 10.0) == doctest::Approx(sum.convert_to<double>()).epsilon(1e-13));
  }
}

TEST_CASE("Bessel J0, J1, J2 against Boost.Math up to z = 1e3") {
  double worst = 0.0;
  for (double z = 0.0; z <= 1000.0; z += 0.0371) {
    for (int n = 0; n <= 2; ++n) {
      const double ref = boost::math::cyl_bessel_j(n, z);
      worst = std::max(worst, std::fabs(bessel_j(n, z) - ref) / envelope(ref, z));
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("bessel_j012 matches the single-order evaluator") {
  for (double z : log_samples(1e-3, 1e8, 200)) {
    const BesselJ012 j = bessel_j012(z);
    CHECK(j.j0 == bessel_j(0, z));
    CHECK(j.j1 == bessel_j(1, z));
    CHECK(j.j2 == bessel_j(2, z));
  }
}

TEST_CASE("Bessel recurrence J2 = (2/z) J1 - J0 on [0.1, 1e6]") {
  double worst = 0.0;
  for (double z : log_samples(0.1, 1e6, 4001)) {
    const BesselJ012 j = bessel_j012(z);
    worst = std::max(worst, std::fabs(j.j2 - (2.0 / z * j.j1 - j.j0)) / envelope(j.j2, z));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("J0' = -J1 by central differences on [0.5, 100]") {
  const double h = 1e-5;
  double worst = 0.0;
  for (double z = 0.5; z <= 100.0; z += 0.0737) {
    const double d = (bessel_j(0, z + h) - bessel_j(0, z - h)) / (2.0 * h);
    worst = std::max(worst, std::fabs(d + bessel_j(1, z)));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("two-term Hankel forms") {
  const double z = 1000.0;
  CHECK(std::fabs(bessel_j_hankel2(0, z) - bessel_j(0, z)) <= 1e-3);
  CHECK(std::fabs(bessel_j_hankel2(2, z) - bessel_j(2, z)) <= 1e-3);
  // cos(z - pi/4) vanishes at z = (4n+3) pi/4, leaving (-1)^n sqrt(2/(pi z))/(8z).
  for (int n : {10, 101, 1000}) {
    const double zn = (4.0 * n + 3.0) * std::numbers::pi / 4.0;
    const double expected = (n % 2 == 0 ? 1.0 : -1.0) * std::sqrt(2.0 / (std::numbers::pi * zn)) /
                            (8.0 * zn);
    CHECK(bessel_j_hankel2(0, zn) == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("Simpson quadrature") {
  SUBCASE("constants and cubics are exact") {
    for (std::size_t n : {3u, 5u, 101u}) {
      CHECK(std::abs(integrate_complex([](double) { return Complex{2.0, -1.0}; }, 0.0, 1.0, n) -
                     Complex{2.0, -1.0}) < 1e-15);
    }
    CHECK(integrate_complex([](double x) { return Complex{x * x * x, 0.0}; }, 0.0, 1.0, 3) ==
          Complex{0.25, 0.0});
  }
  SUBCASE("exp(ix) over a period") {
    const Complex r = integrate_complex([](double x) { return std::polar(1.0, x); }, 0.0,
                                        2.0 * std::numbers::pi, 10001);
    CHECK(std::abs(r) < 1e-12);
  }
  SUBCASE("fourth-order convergence") {
    auto f = [](double x) { return std::exp(Complex{0.3, 2.0} * x); };
    const Complex exact = (std::exp(Complex{0.3, 2.0} * 3.0) - 1.0) / Complex{0.3, 2.0};
    double prev = 0.0;
    for (std::size_t n = 17; n <= 257; n = 2 * n - 1) {
      const double err = std::abs(integrate_complex(f, 0.0, 3.0, n) - exact);
      if (prev > 0.0) CHECK(prev / err == doctest::Approx(16.0).epsilon(0.05));
      prev = err;
    }
  }
  SUBCASE("empty interval and invalid grids") {
    CHECK(integrate_complex([](double) { return Complex{1.0, 0.0}; }, 1.0, 1.0, 3) == Complex{});
    CHECK_THROWS_AS(integrate_complex([](double) { return Complex{}; }, 0.0, 1.0, 4), GridError);
    CHECK_THROWS_AS(integrate_complex([](double) { return Complex{}; }, 0.0, 1.0, 1), GridError);
    CHECK_THROWS_AS(integrate_complex([](double) { return Complex{}; }, 1.0, 0.0, 5), GridError);
  }
}
