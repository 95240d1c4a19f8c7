#pragma once
#include <vector>

#include "toda/symbols.hpp"

namespace toda {

// A complex-valued function sampled on a uniform xi grid.
struct GridFn {
  double x0 = 0.0;
  double dx = 0.0;
  std::vector<cplx> v;

  double x_at(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
  std::size_t size() const { return v.size(); }
};

// Fundamental pair of P1 g'' + Q1 g' + R1 g = 0 on (0, xi_max]:
//   g1 = 1 + O(xi) (analytic branch), g2 = xi^-2 + O(xi^-1) (singular
//   branch, possibly with a log term), built from Frobenius series near 0
//   and continued outward by RK4.  W is the Wronskian g1 g2' - g2 g1'.
struct FundamentalPair {
  GridFn g1, g2, dg1, dg2, W;
  double series_radius = 0.0;  // series/integration matching point
  cplx log_coefficient{};      // coefficient of the log term in g2 (can be 0)
};

FundamentalPair ode_fundamental_g(double y, double xi_max = 2.5,
                                  double step = 1e-3, int n = 0);

// Solution of P0 rho' + Q0 rho = 0 with xi^2 rho -> 1 as xi -> 0:
//   rho(xi) = xi^-2 exp(-int_0^xi [Q0/P0 - 2/s] ds)
cplx rho(const Symbols& sym, double xi);

// g*(xi) = g2 int_anchor^xi g1 B/(W P1) - g1 int_anchor^xi g2 B/(W P1),
// on the grid of the pair; anchor at the right end represents +infinity.
enum class Anchor { plus_infinity, zero };
GridFn variation_of_parameters(const FundamentalPair& fp, const Symbols& sym,
                               const std::function<cplx(double)>& B,
                               Anchor anchor);

// Max relative plug-back residual of P1 g'' + Q1 g' + R1 g = rhs over the
// interior of [lo, hi], derivatives by Richardson differences of the grid.
double plugback_residual(const GridFn& g, const Symbols& sym,
                         const std::function<cplx(double)>& rhs, double lo,
                         double hi);

}  // namespace toda
