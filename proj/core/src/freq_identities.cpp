#include "toda/freq_identities.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace toda {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

cplx cquad(const std::function<cplx(double)>& f, double lo, double hi) {
  if (hi <= lo) return 0.0;
  const double re = GK::integrate([&](double s) { return std::real(f(s)); }, lo, hi);
  const double im = GK::integrate([&](double s) { return std::imag(f(s)); }, lo, hi);
  return {re, im};
}

cplx Efac(double x) { return std::exp(iu * pi * x / sqrt2); }

}  // namespace

cplx Bump::operator()(double s) const {
  const double z = (2.0 * s - a - b) / (b - a);
  if (std::abs(z) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - z * z));
}

double verify_family1_transform(int n, double y, const Bump& phi_hat) {
  const SymbolParams par = SymbolParams::make(n, y);
  const Symbols sym = symbols(n, y);
  const double a_ = phi_hat.a, b_ = phi_hat.b;
  const cplx ga = par.gamma, gs = par.gamma_star;
  const cplx wu = cplx(par.alpha, par.beta);       // alpha + beta i
  const cplx wu1 = cplx(par.alpha1, par.beta);

  // convolution against e^{2 pi i aa x} u(+-x), data supported on [a_, b_]
  auto conv_up = [&](double xi, cplx aa, const std::function<cplx(double)>& f) {
    return cquad([&](double s) { return f(s) * std::exp(2.0 * pi * iu * aa * (xi - s)); },
                 a_, std::min(xi, b_));
  };
  auto conv_dn = [&](double xi, cplx aa, const std::function<cplx(double)>& f) {
    return cquad([&](double s) { return f(s) * std::exp(2.0 * pi * iu * aa * (xi - s)); },
                 std::max(xi, a_), b_);
  };

  auto ph = [&](double s) { return phi_hat(s); };
  auto fp = [&](double s) { return std::exp(2.0 * pi * iu * par.c * s) * phi_hat(s); };
  auto fm = [&](double s) { return std::exp(-2.0 * pi * iu * par.c * s) * phi_hat(s); };

  auto lhs = [&](double xi) {
    const cplx phn = phi_hat(xi);
    const cplx php = std::exp(2.0 * pi * iu * par.c * xi) * phn;
    const cplx phm = std::exp(-2.0 * pi * iu * par.c * xi) * phn;
    const cplx t0 = 2.0 * pi * iu * xi * phn - 2.0 * phn - lambda_inv * php +
                    lambda * phm;
    const cplx t1 = -(-2.0 * pi * iu * par.A1 * conv_up(xi, wu, ph) -
                      2.0 * pi * iu * par.A3 * conv_dn(xi, std::conj(wu), ph));
    const cplx t2 = -(2.0 * pi * iu * par.A3 * conv_up(xi, wu1, ph) +
                      2.0 * pi * iu * par.A1 * conv_dn(xi, std::conj(wu1), ph));
    const cplx t3 =
        -lambda_inv * (2.0 * pi * iu * (par.A4 / lambda) * conv_up(xi, wu, fp) +
                       2.0 * pi * iu * (par.A2 / lambda) * conv_dn(xi, std::conj(wu), fp));
    const cplx t4 =
        lambda * (2.0 * pi * iu * (par.A2 / lambda) * conv_up(xi, wu1, fm) +
                  2.0 * pi * iu * (par.A4 / lambda) * conv_dn(xi, std::conj(wu1), fm));
    return t0 + t1 + t2 + t3 + t4;
  };

  auto h = [&](double xi) {
    return cquad(
        [&](double s) {
          return (1.0 - ga * Efac(s)) * std::exp(-2.0 * pi * iu * wu * s) *
                 phi_hat(s);
        },
        a_, std::min(xi, b_));
  };
  const cplx hb = h(b_);
  auto Gfun = [&](double x) {
    return (1.0 - gs * Efac(x)) / (1.0 - ga * Efac(x)) *
           std::exp(-4.0 * pi * par.beta * x);
  };
  auto g = [&](double xi) {
    if (xi >= b_) return -hb * Gfun(xi);
    return cquad([&](double s) { return h(s) * sym.J(s); }, std::max(xi, a_), b_) -
           hb * Gfun(b_);
  };
  auto rhs = [&](double xi) {
    const cplx hp = (1.0 - ga * Efac(xi)) * std::exp(-2.0 * pi * iu * wu * xi) *
                    phi_hat(xi);
    const cplx core = sym.P(xi) * hp + sym.Q(xi) * h(xi) - sym.R(xi) * g(xi);
    return 2.0 * pi * iu * std::exp(2.0 * pi * iu * wu * xi) * core /
           (1.0 - ga * Efac(xi));
  };

  const double sample[] = {0.3, 0.8, 1.2, 2.0};
  double scale = 0.0, worst = 0.0;
  cplx Lv[4], Rv[4];
  int i = 0;
  for (double xi : sample) {
    Lv[i] = lhs(xi);
    Rv[i] = rhs(xi);
    scale = std::max(scale, std::abs(Lv[i]));
    ++i;
  }
  for (int j = 0; j < i; ++j)
    worst = std::max(worst, std::abs(Lv[j] - Rv[j]) / scale);
  return worst;
}

double verify_family0_transform(int n, double y, const Bump& sigma_hat) {
  const SymbolParams par = SymbolParams::make(n, y);
  const Symbols sym = symbols(n, y);
  const double a_ = sigma_hat.a, b_ = sigma_hat.b;
  const cplx w = (y > 0.0) ? cplx(par.alpha0, par.beta0)
                           : cplx(par.alpha0, -par.beta0);
  const double sgn = (y > 0.0) ? 1.0 : -1.0;

  auto lhs = [&](double xi) {
    const cplx sg = sigma_hat(xi);
    cplx i1, i2;
    if (y > 0.0) {
      i1 = cquad(
          [&](double s) {
            return std::exp(2.0 * pi * iu * w * (xi - s)) * (Efac(s) - 1.0) *
                   sigma_hat(s);
          },
          a_, std::min(xi, b_));
      i2 = cquad(
          [&](double s) {
            return std::exp(2.0 * pi * iu * w * (xi - s)) *
                   std::exp(-iu * pi * (xi - s) / sqrt2) *
                   (1.0 - 1.0 / Efac(s)) * sigma_hat(s);
          },
          a_, std::min(xi, b_));
    } else {
      i1 = cquad(
          [&](double s) {
            return std::exp(2.0 * pi * iu * w * (xi - s)) * (Efac(s) - 1.0) *
                   sigma_hat(s);
          },
          std::max(xi, a_), b_);
      i2 = cquad(
          [&](double s) {
            return std::exp(2.0 * pi * iu * w * (xi - s)) *
                   std::exp(-iu * pi * (xi - s) / sqrt2) *
                   (1.0 - 1.0 / Efac(s)) * sigma_hat(s);
          },
          std::max(xi, a_), b_);
    }
    const cplx k = iu * pi / sqrt2;
    const cplx t1 = (Efac(xi) - 1.0) * sg + sgn * k * i1;
    const cplx t2 = (1.0 - 1.0 / Efac(xi)) * sg - sgn * k * i2;
    return 2.0 * pi * iu * xi * sg - lambda * t1 - lambda_inv * t2;
  };

  auto rhs = [&](double xi) {
    cplx hcum;
    if (y > 0.0) {
      hcum = cquad(
          [&](double s) {
            return std::exp(-2.0 * pi * iu * w * s) * (Efac(s) - 1.0) *
                   sigma_hat(s);
          },
          a_, std::min(xi, b_));
    } else {
      hcum = cquad(
          [&](double s) {
            return std::exp(-2.0 * pi * iu * w * s) * (Efac(s) - 1.0) *
                   sigma_hat(s);
          },
          std::max(xi, a_), b_);
    }
    const cplx hprime =
        sgn * std::exp(-2.0 * pi * iu * w * xi) * (Efac(xi) - 1.0) * sigma_hat(xi);
    return sgn * std::exp(2.0 * pi * iu * w * xi) / (Efac(xi) - 1.0) *
           (sym.P0(xi) * hprime + sym.Q0(xi) * hcum);
  };

  const double sample[] = {0.3, 0.8, 1.2, 2.0};
  double scale = 0.0, worst = 0.0;
  cplx Lv[4], Rv[4];
  int i = 0;
  for (double xi : sample) {
    Lv[i] = lhs(xi);
    Rv[i] = rhs(xi);
    scale = std::max(scale, std::abs(Lv[i]));
    ++i;
  }
  for (int j = 0; j < i; ++j)
    worst = std::max(worst, std::abs(Lv[j] - Rv[j]) / scale);
  return worst;
}

}  // namespace toda
