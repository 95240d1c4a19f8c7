#include "toda/fourier.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace toda {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

double step_up(double t) { return t >= 0.0 ? 1.0 : 0.0; }  // u(0) = 1
double sgn(double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); }

cplx cquad(const std::function<cplx(double)>& f, double lo, double hi) {
  const double re = GK::integrate([&](double s) { return std::real(f(s)); }, lo, hi);
  const double im = GK::integrate([&](double s) { return std::imag(f(s)); }, lo, hi);
  return {re, im};
}

}  // namespace

FTClosedForm ft_simple_pole(double a1, double a2, Branch branch) {
  FTClosedForm out;
  switch (branch) {
    case Branch::lower:
      out.smooth = [a1, a2](double xi) {
        return 2.0 * pi * iu * std::exp(2.0 * pi * iu * cplx(a1, -a2) * xi) *
               step_up(-xi);
      };
      break;
    case Branch::upper:
      out.smooth = [a1, a2](double xi) {
        return -2.0 * pi * iu * std::exp(2.0 * pi * iu * cplx(a1, a2) * xi) *
               step_up(xi);
      };
      break;
    case Branch::principal:
      out.smooth = [a1](double xi) {
        return -pi * iu * std::exp(2.0 * pi * iu * a1 * xi) * sgn(xi);
      };
      break;
  }
  return out;
}

FTClosedForm ft_rational(double a1, double a2, cplx a3) {
  FTClosedForm out;
  const cplx w_up = 0.5 - a3 / (2.0 * a2 * iu);
  const cplx w_dn = 0.5 + a3 / (2.0 * a2 * iu);
  out.smooth = [=](double xi) {
    return w_up * (-2.0 * pi * iu) *
               std::exp(2.0 * pi * iu * cplx(a1, a2) * xi) * step_up(xi) +
           w_dn * (2.0 * pi * iu) *
               std::exp(2.0 * pi * iu * cplx(a1, -a2) * xi) * step_up(-xi);
  };
  return out;
}

ThetaRatioFT ft_theta_ratios(int n, double y) {
  const SymbolParams p = SymbolParams::make(n, y);
  const double al = p.alpha, al1 = p.alpha1, be = p.beta;
  const cplx A1 = p.A1, A2 = p.A2, A3 = p.A3, A4 = p.A4;
  auto e_up = [](double a, double b, double xi) {
    return std::exp(2.0 * pi * iu * cplx(a, b) * xi);
  };

  ThetaRatioFT out;
  out.ds_theta_over_theta.smooth = [=](double xi) {
    return -2.0 * pi * iu * A1 * e_up(al, be, xi) * step_up(xi) -
           2.0 * pi * iu * A3 * e_up(al, -be, xi) * step_up(-xi);
  };
  out.dt_theta_m1_over_theta_m1.smooth = [=](double xi) {
    return 2.0 * pi * iu * A3 * e_up(al1, be, xi) * step_up(xi) +
           2.0 * pi * iu * A1 * e_up(al1, -be, xi) * step_up(-xi);
  };
  out.theta_m1_over_theta.delta_weight = 1.0;
  out.theta_m1_over_theta.smooth = [=](double xi) {
    return 2.0 * pi * iu * (A4 / lambda) * e_up(al, be, xi) * step_up(xi) +
           2.0 * pi * iu * (A2 / lambda) * e_up(al, -be, xi) * step_up(-xi);
  };
  out.theta_over_theta_m1.delta_weight = 1.0;
  out.theta_over_theta_m1.smooth = [=](double xi) {
    return 2.0 * pi * iu * (A2 / lambda) * e_up(al1, be, xi) * step_up(xi) +
           2.0 * pi * iu * (A4 / lambda) * e_up(al1, -be, xi) * step_up(-xi);
  };
  return out;
}

cplx ft_quadrature(const std::function<cplx(double)>& f, double xi,
                   double window, cplx tail_a_plus, cplx tail_a_minus) {
  // Unit subintervals keep the oscillatory kernel resolved at moderate |xi|.
  const int half = static_cast<int>(std::ceil(window));
  cplx acc = 0.0;
  auto g = [&](double x) { return f(x) * std::exp(-2.0 * pi * iu * x * xi); };
  for (int k = -half; k < half; ++k) acc += cquad(g, k, k + 1.0);

  if (xi != 0.0 && (tail_a_plus != 0.0 || tail_a_minus != 0.0)) {
    // Leading integration-by-parts term of the a/x tails beyond the window.
    const double X = half;
    acc += (tail_a_plus * std::exp(-2.0 * pi * iu * X * xi) +
            tail_a_minus * std::exp(2.0 * pi * iu * X * xi)) /
           (2.0 * pi * iu * xi * X);
  }
  return acc;
}

}  // namespace toda
