#include <doctest.h>

#include "suites.hpp"
#include "toda/linops.hpp"
#include "toda/lump.hpp"

using namespace toda;

TEST_CASE("derivative fields solve the linearized equation") {
  for (auto dir : {Direction::x, Direction::y}) {
    const SeqField f = kernel_field(dir);
    for (const SitePoint p : {SitePoint{0, 0.2, 0.9}, SitePoint{-1, 3.3, -2.0}})
      CHECK(linearized_toda_residual(f, p).magnitude < 1e-12);
  }
}

TEST_CASE("starred operators at the origin") {
  const SitePoint o{0, 0.0, 0.0};
  const cplx f0 = apply_starred(OperatorTag::F0star, pair_sigma_linear(), o);
  CHECK(f0.real() == doctest::Approx(0.5 * (sqrt2 + 3.0)).epsilon(1e-14));
  CHECK(f0.imag() == doctest::Approx(0.0));
  const cplx m0 = apply_starred(OperatorTag::M0star, pair_sigma_linear(), o);
  CHECK(m0.real() == doctest::Approx(0.5 * (1.0 - sqrt2)).epsilon(1e-14));
  const cplx fy = apply_starred(OperatorTag::F0star, pair_sigma_y(), o);
  CHECK(fy.real() == doctest::Approx(0.0));
  CHECK(fy.imag() == doctest::Approx(-0.25 * (sqrt2 - 1.0)).epsilon(1e-14));
}

TEST_CASE("role misuse is rejected") {
  CHECK_THROWS_AS(apply_family1(OperatorTag::F1, pair_sigma_linear(),
                                Role::Sigma, {0, 0.1, 0.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_family0(OperatorTag::G0, pair_sigma_linear(),
                                Role::Sigma, {0, 0.1, 0.1}),
                  std::invalid_argument);
}

TEST_CASE("evaluation near an omega zero is rejected") {
  const double x0 = -(sqrt2 - 1.0) / (4.0 * sqrt2);  // omega_0 vanishes here
  CHECK_THROWS_AS(apply_family0(OperatorTag::F0, pair_sigma_linear(),
                                Role::Sigma, {0, x0, 0.0}),
                  NearPoleError);
}

TEST_CASE("full suite passes") {
  SuiteOptions o;
  o.samples = 300;
  o.seed = 11;
  const SuiteReport rep = run_linearized_suite(o);
  for (const auto& c : rep.checks) {
    INFO(c.name << " worst " << c.worst_residual);
    CHECK(c.passed);
  }
  CHECK(rep.checks.size() >= 8);
}
