#pragma once
#include "toda/constants.hpp"

namespace toda {

struct SitePoint {
  int n = 0;
  double x = 0.0;
  double y = 0.0;
};

enum class Family { Kappa, Omega, Theta };

// Value and s/t-partials up to second order at a point.
// s = x+iy, t = x-iy, so d_s = (d_x - i d_y)/2, d_t = (d_x + i d_y)/2.
struct TauJet {
  cplx value{};
  cplx d_s{}, d_t{};
  cplx d_ss{}, d_st{}, d_tt{};
};

// Closed forms:
//   kappa_n = 1
//   omega_n = 2*sqrt2*x + n + 2iy + (sqrt2-1)/2  (= lambda*s + t/lambda + n + (sqrt2-1)/2)
//   theta_n = (2*sqrt2*x + n)^2 + 4y^2 + 1/4
// All partials are exact: theta is quadratic in (s,t), omega affine.
TauJet eval_tau(Family family, const SitePoint& p);

const char* family_name(Family family);

}  // namespace toda
