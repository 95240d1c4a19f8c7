#include <doctest.h>

#include <cmath>

#include "suites.hpp"
#include "toda/fourier.hpp"
#include "toda/freq_identities.hpp"
#include "toda/gridft.hpp"
#include "toda/lump.hpp"
#include "toda/ode.hpp"
#include "toda/symbols.hpp"

using namespace toda;

TEST_CASE("symbol normalization at xi = 0") {
  for (double y : {0.1, 1.0, 10.0}) {
    const Symbols s = symbols(0, y);
    CHECK(std::abs(s.Q(0.0)) < 1e-12);
    CHECK(std::abs(s.J(0.0)) < 1e-12);
    const double h = 1e-6;
    CHECK(std::abs((s.Q(h) - s.Q(-h)) / (2.0 * h) - pi * iu) < 1e-8);
  }
}

TEST_CASE("gamma factorization") {
  for (double y : {-7.0, -0.3, 0.5, 31.0}) {
    const SymbolParams p = SymbolParams::make(0, y);
    CHECK(std::abs(p.gamma * p.gamma_star - lambda_inv * lambda_inv) < 1e-14);
    CHECK(std::abs(p.gamma) < 1.0);
  }
}

TEST_CASE("J vanishes exactly on the 2 sqrt2 lattice") {
  const SymbolParams p = SymbolParams::make(0, 0.8);
  const auto zeros = j_zeros(p, 12.0);
  REQUIRE(zeros.size() == 4);
  for (std::size_t j = 0; j < zeros.size(); ++j)
    CHECK(zeros[j] ==
          doctest::Approx(2.0 * sqrt2 * double(j + 1)).epsilon(1e-10));
}

TEST_CASE("first-order symbol solution rho") {
  const Symbols s = symbols(0, 0.5);
  CHECK(std::abs(rho(s, 1e-3)) * 1e-6 == doctest::Approx(1.0).epsilon(1e-5));
  const double h = 1e-5;
  for (double xi : {0.4, 1.7}) {
    const cplx dr = (rho(s, xi + h) - rho(s, xi - h)) / (2.0 * h);
    CHECK(std::abs(s.P0(xi) * dr + s.Q0(xi) * rho(s, xi)) /
              std::abs(s.Q0(xi) * rho(s, xi)) <
          1e-7);
  }
}

TEST_CASE("fundamental pair plugs back into the second-order symbol") {
  const double y = 1.0;
  const Symbols s = symbols(0, y);
  const FundamentalPair fp = ode_fundamental_g(y);
  auto zero = [](double) { return cplx(0.0); };
  CHECK(plugback_residual(fp.g1, s, zero, 0.1, 2.4) < 1e-9);
  CHECK(plugback_residual(fp.g2, s, zero, 0.1, 2.4) < 1e-7);
  CHECK(std::abs(fp.log_coefficient) < 1e-10);  // no log branch at y = 1
}

TEST_CASE("closed-form transforms agree with windowed quadrature") {
  const ThetaRatioFT fr = ft_theta_ratios(0, 1.0);
  auto ds_over = [](double x) {
    const TauJet t = eval_tau(Family::Theta, {0, x, 1.0});
    return t.d_s / t.value;
  };
  CHECK(std::abs(fr.ds_theta_over_theta(0.37) -
                 ft_quadrature(ds_over, 0.37, 400.0, 1.0, 1.0)) < 1e-4);
  auto ratio = [](double x) {
    return cplx(theta_val(-1, x, 1.0) / theta_val(0, x, 1.0) - 1.0);
  };
  CHECK(std::abs(fr.theta_m1_over_theta(-1.2) -
                 ft_quadrature(ratio, -1.2, 400.0, -1.0 / sqrt2,
                               -1.0 / sqrt2)) < 1e-4);
}

TEST_CASE("frequency-side identities for both operator families") {
  const Bump bump;
  CHECK(verify_family1_transform(0, 1.0, bump) < 1e-6);
  CHECK(verify_family1_transform(1, 0.7, bump) < 1e-6);
  CHECK(verify_family0_transform(0, 1.0, bump) < 1e-6);
  CHECK(verify_family0_transform(0, -1.0, bump) < 1e-6);
}

namespace {
double traveling_mode(int n, double x, double y) {
  return dx_log_theta(n - 1, x, y) - dx_log_theta(n, x, y);
}
}  // namespace

TEST_CASE("traveling multiplier solve, frozen values") {
  const MultiplierResult coarse =
      multiplier_solve_eta_tilde(traveling_mode, FTGrid{20.0, 512}, 1e-6,
                                 /*check_mean=*/false);
  CHECK(coarse.mean_f == doctest::Approx(-3.682377e-4).epsilon(1e-4));
  CHECK(coarse.yi_interior_max == doctest::Approx(2.496999e-2).epsilon(1e-3));

  const MultiplierResult fine =
      multiplier_solve_eta_tilde(traveling_mode, FTGrid{20.0, 1024}, 1e-6);
  CHECK(fine.mean_zero_ok);
  CHECK(std::abs(fine.mean_f) < 1e-6);
  CHECK(fine.yi_interior_max < 1e-3);
  CHECK(fine.eta_imag_max < 1e-12);
  CHECK(fine.t_theta_rel < 1e-3);
}

TEST_CASE("non-kernel input fails the mean-zero gate") {
  auto gauss = [](int n, double x, double y) {
    const double xs = x + n * delta;
    return std::exp(-((xs - 1.0) * (xs - 1.0) + y * y) / 4.0);
  };
  CHECK_THROWS_AS(multiplier_solve_eta_tilde(gauss, FTGrid{20.0, 256}, 1e-6),
                  MultiplierError);
}

TEST_CASE("full suite passes") {
  SuiteOptions o;
  o.samples = 100;
  const SuiteReport rep = run_fourier_suite(o);
  for (const auto& c : rep.checks) {
    INFO(c.name << " worst " << c.worst_residual);
    CHECK(c.passed);
  }
}
