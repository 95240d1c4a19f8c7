#include "toda/ode.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace toda {

namespace {

using Series = std::vector<cplx>;

Series mul(const Series& a, const Series& b) {
  Series c(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < c.size() && j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  return c;
}

Series div(const Series& a, const Series& b) {
  Series c(a.size(), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    cplx s = k < a.size() ? a[k] : cplx(0.0);
    for (std::size_t j = 1; j <= k && j < b.size(); ++j) s -= b[j] * c[k - j];
    c[k] = s / b[0];
  }
  return c;
}

Series integ(const Series& a) {
  Series I(a.size() + 1, 0.0);
  for (std::size_t k = 1; k < I.size(); ++k) I[k] = a[k - 1] / double(k);
  return I;
}

// exp of a series with zero constant term, via e' = a' e.
Series expser(const Series& a) {
  Series e(a.size(), 0.0);
  e[0] = 1.0;
  for (std::size_t k = 1; k < e.size(); ++k) {
    cplx s = 0.0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j)
      s += double(j) * a[j] * e[k - j];
    e[k] = s / double(k);
  }
  return e;
}

// Taylor coefficients at 0 of an analytic function, by trapezoidal Cauchy
// integrals on a circle of radius r (spectrally accurate).
Series taylor(const std::function<cplx(cplx)>& f, std::size_t count, double r,
              int m = 128) {
  std::vector<cplx> samples(m);
  for (int j = 0; j < m; ++j) {
    const double phi = 2.0 * pi * j / m;
    samples[j] = f(r * std::exp(iu * phi));
  }
  Series out(count, 0.0);
  for (std::size_t k = 0; k < count; ++k) {
    cplx s = 0.0;
    for (int j = 0; j < m; ++j) {
      const double phi = 2.0 * pi * j / m;
      s += samples[j] * std::exp(-iu * phi * double(k));
    }
    out[k] = s / (double(m) * std::pow(r, double(k)));
  }
  return out;
}

cplx horner(const Series& a, double s) {
  cplx v = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) v = v * s + a[k];
  return v;
}

cplx horner_d(const Series& a, double s) {
  cplx v = 0.0;
  for (std::size_t k = a.size(); k-- > 1;) v = v * s + double(k) * a[k];
  return v;
}

}  // namespace

FundamentalPair ode_fundamental_g(double y, double xi_max, double step, int n) {
  const Symbols sym = symbols(n, y);
  const std::size_t M = 40;
  const double rad = 0.5;
  const Series p = taylor(sym.Pc, M + 3, rad);
  const Series q = taylor(sym.Q1c, M + 3, rad);
  const Series r = taylor(sym.R1c, M + 3, rad);

  // Analytic branch: indicial roots 0 and -2, take the root-0 series.
  Series a(M, 0.0);
  a[0] = 1.0;
  for (std::size_t N = 1; N < M; ++N) {
    const double Nd = double(N);
    const cplx den = p[2] * Nd * (Nd - 1.0) + q[1] * Nd + r[0];
    cplx s = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
      const double jd = double(j);
      s += a[j] * (p[N - j + 2] * jd * (jd - 1.0) + q[N - j + 1] * jd + r[N - j]);
    }
    a[N] = -s / den;
  }

  // Second branch by reduction of order: W0 = exp(-int Q1/P1) ~ s^-3 nu0,
  // mu = W0/g1^2 = s^-3 nu, g2 = -(2/c0) g1 int mu.
  Series qs(M, 0.0), ps(M, 0.0);
  for (std::size_t j = 0; j < M; ++j) {
    qs[j] = q[j + 1];
    ps[j] = p[j + 2];
  }
  const Series A = div(qs, ps);  // Q1/P1 = A(s)/s, A(0) = 3
  Series At(M, 0.0);             // (A(s) - A(0))/s
  for (std::size_t j = 0; j + 1 < M; ++j) At[j] = A[j + 1];
  Series I1 = integ(At);
  for (auto& v : I1) v = -v;
  const Series W0 = expser(I1);
  const Series nu = div(W0, mul(a, a));
  const cplx c0 = nu[0], c1 = nu[1], c2 = nu[2];
  const cplx scale = -2.0 / c0;

  const double s0 = 0.05;
  auto F_at = [&](double s) {
    cplx v = -c0 / (2.0 * s * s) - c1 / s + c2 * std::log(s);
    double pw = s;
    for (std::size_t j = 3; j < nu.size(); ++j) {
      v += nu[j] * pw / double(j - 2);
      pw *= s;
    }
    return v;
  };
  const cplx g1_0 = horner(a, s0), dg1_0 = horner_d(a, s0);
  const cplx F0 = F_at(s0);
  const cplx mu0 = horner(nu, s0) / (s0 * s0 * s0);
  const cplx g2_0 = scale * g1_0 * F0;
  const cplx dg2_0 = scale * (dg1_0 * F0 + g1_0 * mu0);

  FundamentalPair fp;
  fp.series_radius = s0;
  fp.log_coefficient = scale * c2;

  const std::size_t count = std::size_t(std::llround((xi_max - s0) / step)) + 1;
  auto init_grid = [&](GridFn& g) {
    g.x0 = s0;
    g.dx = step;
    g.v.resize(count);
  };
  init_grid(fp.g1);
  init_grid(fp.g2);
  init_grid(fp.dg1);
  init_grid(fp.dg2);
  init_grid(fp.W);

  auto rhs = [&](double x, cplx g, cplx gp, cplx& dg, cplx& dgp) {
    dg = gp;
    dgp = -(sym.Q1(x) * gp + sym.R1(x) * g) / sym.P1(x);
  };

  cplx u1 = g1_0, v1 = dg1_0, u2 = g2_0, v2 = dg2_0;
  for (std::size_t i = 0; i < count; ++i) {
    fp.g1.v[i] = u1;
    fp.dg1.v[i] = v1;
    fp.g2.v[i] = u2;
    fp.dg2.v[i] = v2;
    fp.W.v[i] = u1 * v2 - u2 * v1;
    if (i + 1 == count) break;
    const double x = s0 + step * double(i);
    auto rk4 = [&](cplx& u, cplx& v) {
      cplx k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
      rhs(x, u, v, k1u, k1v);
      rhs(x + 0.5 * step, u + 0.5 * step * k1u, v + 0.5 * step * k1v, k2u, k2v);
      rhs(x + 0.5 * step, u + 0.5 * step * k2u, v + 0.5 * step * k2v, k3u, k3v);
      rhs(x + step, u + step * k3u, v + step * k3v, k4u, k4v);
      u += step / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
      v += step / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    };
    rk4(u1, v1);
    rk4(u2, v2);
  }
  return fp;
}

cplx rho(const Symbols& sym, double xi) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  // Q0/P0 - 2/s is analytic at 0 but numerically cancellous there; integrate
  // the first stretch from its Taylor series (Q0/P0 = A0(s)/s, A0(0) = 2).
  const std::size_t M = 30;
  const Series p0 = taylor(sym.P0c, M + 2, 0.5);
  const Series q0 = taylor(sym.Q0c, M + 2, 0.5);
  Series ps(M, 0.0), qs(M, 0.0);
  for (std::size_t j = 0; j < M; ++j) {
    ps[j] = p0[j + 2];
    qs[j] = q0[j + 1];
  }
  const Series A0 = div(qs, ps);
  const double sc = std::min(0.25, std::abs(xi));
  const double s_ser = xi >= 0.0 ? sc : -sc;
  cplx I = 0.0;
  double pw = s_ser;
  for (std::size_t j = 1; j < A0.size(); ++j) {
    I += A0[j] * pw / double(j);
    pw *= s_ser;
  }
  if (std::abs(xi) > sc) {
    auto integrand = [&](double s) { return sym.Q0(s) / sym.P0(s) - 2.0 / s; };
    const double re = GK::integrate(
        [&](double s) { return std::real(integrand(s)); }, s_ser, xi);
    const double im = GK::integrate(
        [&](double s) { return std::imag(integrand(s)); }, s_ser, xi);
    I += cplx(re, im);
  }
  return std::exp(-I) / (xi * xi);
}

GridFn variation_of_parameters(const FundamentalPair& fp, const Symbols& sym,
                               const std::function<cplx(double)>& B,
                               Anchor anchor) {
  const std::size_t n = fp.g1.size();
  std::vector<cplx> f1(n), f2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = fp.g1.x_at(i);
    const cplx d = fp.W.v[i] * sym.P1(x);
    f1[i] = fp.g1.v[i] * B(x) / d;
    f2[i] = fp.g2.v[i] * B(x) / d;
  }
  // Cumulative trapezoid from the anchor end.
  std::vector<cplx> I1(n, 0.0), I2(n, 0.0);
  if (anchor == Anchor::zero) {
    for (std::size_t i = 1; i < n; ++i) {
      I1[i] = I1[i - 1] + 0.5 * fp.g1.dx * (f1[i - 1] + f1[i]);
      I2[i] = I2[i - 1] + 0.5 * fp.g1.dx * (f2[i - 1] + f2[i]);
    }
  } else {
    for (std::size_t i = n - 1; i-- > 0;) {
      I1[i] = I1[i + 1] - 0.5 * fp.g1.dx * (f1[i + 1] + f1[i]);
      I2[i] = I2[i + 1] - 0.5 * fp.g1.dx * (f2[i + 1] + f2[i]);
    }
  }
  GridFn out;
  out.x0 = fp.g1.x0;
  out.dx = fp.g1.dx;
  out.v.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.v[i] = fp.g2.v[i] * I1[i] - fp.g1.v[i] * I2[i];
  return out;
}

double plugback_residual(const GridFn& g, const Symbols& sym,
                         const std::function<cplx(double)>& rhs, double lo,
                         double hi) {
  double worst = 0.0;
  const double dx = g.dx;
  for (std::size_t i = 2; i + 2 < g.size(); ++i) {
    const double x = g.x_at(i);
    if (x < lo || x > hi) continue;
    const cplx d1 = (8.0 * (g.v[i + 1] - g.v[i - 1]) - (g.v[i + 2] - g.v[i - 2])) /
                    (12.0 * dx);
    const cplx d2 = (-g.v[i + 2] + 16.0 * g.v[i + 1] - 30.0 * g.v[i] +
                     16.0 * g.v[i - 1] - g.v[i - 2]) /
                    (12.0 * dx * dx);
    const cplx t1 = sym.P1(x) * d2, t2 = sym.Q1(x) * d1, t3 = sym.R1(x) * g.v[i];
    const cplx b = rhs(x);
    const double rel = std::abs(t1 + t2 + t3 - b) /
                       (std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(b) +
                        1e-300);
    worst = std::max(worst, rel);
  }
  return worst;
}

}  // namespace toda
