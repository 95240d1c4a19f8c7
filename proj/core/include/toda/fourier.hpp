#pragma once
#include <functional>

#include "toda/symbols.hpp"

namespace toda {

// Convention: forward kernel e^{-2 pi i x xi}.  Closed forms carry their
// delta component symbolically (weight of delta at xi = 0), never as a
// discretized spike.
struct FTClosedForm {
  cplx delta_weight{};                 // coefficient of delta(xi)
  std::function<cplx(double)> smooth;  // everything else

  cplx operator()(double xi) const { return smooth(xi); }
};

enum class Branch { lower, upper, principal };

// Transform of 1/(x + a1 -+ a2 i):
//   lower    : 2 pi i e^{2 pi i (a1 - a2 i) xi} u(-xi)        (a2 > 0)
//   upper    : -2 pi i e^{2 pi i (a1 + a2 i) xi} u(xi)        (a2 > 0)
//   principal: -pi i e^{2 pi i a1 xi} sgn(xi)
FTClosedForm ft_simple_pole(double a1, double a2, Branch branch);

// Transform of ((x+a1) + a3)/((x+a1)^2 + a2^2), a2 > 0:
//   (1/2 - a3/(2 a2 i)) (-2 pi i) e^{2 pi i (a1 + a2 i) xi} u(xi)
// + (1/2 + a3/(2 a2 i)) ( 2 pi i) e^{2 pi i (a1 - a2 i) xi} u(-xi)
FTClosedForm ft_rational(double a1, double a2, cplx a3);

// The four theta-ratio transforms at (n, y):
//   [d_s theta_n / theta_n]^, [d_t theta_{n-1} / theta_{n-1}]^,
//   [theta_{n-1}/theta_n]^,   [theta_n/theta_{n-1}]^
struct ThetaRatioFT {
  FTClosedForm ds_theta_over_theta;
  FTClosedForm dt_theta_m1_over_theta_m1;
  FTClosedForm theta_m1_over_theta;
  FTClosedForm theta_over_theta_m1;
};
ThetaRatioFT ft_theta_ratios(int n, double y);

// Windowed quadrature oracle for the forward transform on [-X, X], with an
// optional first-order tail correction for integrands decaying like
// a_plus/x (x -> +inf) and a_minus/x (x -> -inf):
//   tail ~ (a_plus e^{-2 pi i X xi} + a_minus e^{2 pi i X xi}) / (2 pi i xi X)
cplx ft_quadrature(const std::function<cplx(double)>& f, double xi,
                   double window = 400.0, cplx tail_a_plus = 0.0,
                   cplx tail_a_minus = 0.0);

}  // namespace toda
