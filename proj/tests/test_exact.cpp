#include <doctest.h>

#include <cmath>

#include "suites.hpp"
#include "toda/hirota.hpp"
#include "toda/lump.hpp"
#include "toda/tau.hpp"

using namespace toda;

TEST_CASE("theta and lump values at the origin") {
  CHECK(theta_val(0, 0.0, 0.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(eval_lump({0, 0.0, 0.0}) ==
        doctest::Approx(std::log(5.0)).epsilon(1e-15));
  const Jet2 j = lump_field().jet({0, 0.0, 0.0});
  CHECK(j.dx.real() ==
        doctest::Approx(-16.0 * sqrt2 / 5.0).epsilon(1e-14));
  CHECK(j.dx.imag() == 0.0);
}

TEST_CASE("bilinear derivative of theta against itself at the origin") {
  const cplx d = hirota_D_tau(1, 1, Family::Theta, Family::Theta, {0, 0.0, 0.0});
  CHECK(d.real() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(d.imag() == 0.0);
}

TEST_CASE("lattice equation residual on a coarse sample") {
  for (int i = -4; i <= 4; ++i)
    for (int n = -2; n <= 2; ++n) {
      const Residual r = toda_residual(lump_field(), {n, 0.7 * i, -0.5 * i});
      CHECK(r.magnitude < 1e-12);
    }
}

TEST_CASE("product identities at spot points") {
  for (const SitePoint p : {SitePoint{0, 0.3, -0.8}, SitePoint{2, -4.1, 3.7}}) {
    CHECK(bilinear_residual(Family::Theta, p).magnitude < 1e-13);
    CHECK(bilinear_residual(Family::Omega, p).magnitude < 1e-13);
    CHECK(exchange_identity_residual(Family::Theta, Family::Omega,
                                     cplx(lambda), p)
              .magnitude < 1e-12);
    auto [b1a, b1b] = backlund_residual_b1(p);
    auto [b2a, b2b] = backlund_residual_b2(p);
    CHECK(b1a.magnitude < 1e-13);
    CHECK(b1b.magnitude < 1e-13);
    CHECK(b2a.magnitude < 1e-13);
    CHECK(b2b.magnitude < 1e-13);
  }
}

TEST_CASE("full suite passes and is seed deterministic") {
  SuiteOptions o;
  o.samples = 300;
  o.seed = 11;
  const SuiteReport a = run_exact_suite(o);
  CHECK(a.all_passed());
  CHECK(a.checks.size() >= 8);
  const SuiteReport b = run_exact_suite(o);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i)
    CHECK(a.checks[i].worst_residual == b.checks[i].worst_residual);
}
