#include <doctest.h>

#include <cmath>

#include "suites.hpp"
#include "toda/spectral.hpp"

using namespace toda;

TEST_CASE("grid geometry") {
  const GridSpec g{12.0, 4};
  CHECK(g.h() == doctest::Approx(delta / 4.0).epsilon(1e-15));
  CHECK(g.m() % 2 == 0);
  CHECK(std::abs(g.L() - 12.0) < g.h());
  CHECK(g.x_at(0) == doctest::Approx(-g.L()));
  CHECK(g.x_at(g.nx() - 1) == doctest::Approx(g.L()));
}

TEST_CASE("assembled operator annihilates constants away from the boundary") {
  const GridSpec g{6.0, 2};
  const DiscreteOperator op = assemble(g);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(op.A.rows());
  Eigen::VectorXd r = op.A * ones;
  const int nx = g.nx();
  double worst = 0.0;
  for (int i = g.refine; i < nx - g.refine; ++i)
    for (int j = 1; j < nx - 1; ++j)
      worst = std::max(worst, std::abs(r[g.idx(i, j)]));
  CHECK(worst < 1e-12);
}

TEST_CASE("near-kernel spectrum, frozen values at L=8 k=2") {
  const GridSpec g{8.0, 2};
  const KernelReport rep = near_kernel(assemble(g), 4, 1e-10, 7);
  REQUIRE(rep.singular_values.size() == 4);
  const double frozen[4] = {0.0140322, 0.0301567, 0.0417231, 0.0516355};
  for (int i = 0; i < 4; ++i)
    CHECK(rep.singular_values[i] ==
          doctest::Approx(frozen[i]).epsilon(2e-4));
  CHECK(rep.gap_ratio == doctest::Approx(frozen[2] / frozen[1]).epsilon(1e-3));
}

TEST_CASE("same seed, same spectrum") {
  const GridSpec g{8.0, 2};
  const DiscreteOperator op = assemble(g);
  const KernelReport a = near_kernel(op, 4, 1e-10, 99);
  const KernelReport b = near_kernel(op, 4, 1e-10, 99);
  for (int i = 0; i < 4; ++i)
    CHECK(a.singular_values[i] == b.singular_values[i]);
}

TEST_CASE("discretized derivative modes") {
  const GridSpec g{8.0, 2};
  const auto mx = discrete_mode(g, true);
  double norm = 0.0;
  for (double v : mx) norm += v * v;
  CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-12));
  const DiscreteOperator op = assemble(g);
  // truncation-limited; shrinks under refinement but stays O(1) at k=2
  CHECK(mode_interior_residual(op, true) < 1.0);
  CHECK(mode_interior_residual(op, false) < 2.0);
}

TEST_CASE("threshold model") {
  CHECK(theta_small(delta / 4.0, 12.0) ==
        doctest::Approx(1.35 / 144.0).epsilon(1e-12));
}

TEST_CASE("kernel suite regression") {
  SuiteOptions o;
  o.half_width = 8.0;
  o.refine = 2;
  const KernelOutcome out = run_kernel_suite(o);
  for (const auto& c : out.report.checks) {
    INFO(c.name << " worst " << c.worst_residual);
    CHECK(c.passed);
  }
  CHECK(out.kernel.kernel_vectors.size() >= 2);
}
