#include "toda/hirota.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>

namespace toda {

namespace {

// D_s^m D_t^k f.g expanded through the jets (m + k <= 2 only).
cplx hirota_from_jets(int m, int k, const Jet2& f, const Jet2& g) {
  if (m == 0 && k == 0) return f.v * g.v;
  if (m == 1 && k == 0) return f.ds() * g.v - f.v * g.ds();
  if (m == 0 && k == 1) return f.dt() * g.v - f.v * g.dt();
  if (m == 1 && k == 1)
    return f.dst() * g.v - f.ds() * g.dt() - f.dt() * g.ds() + f.v * g.dst();
  if (m == 2 && k == 0) return f.dss() * g.v - 2.0 * f.ds() * g.ds() + f.v * g.dss();
  if (m == 0 && k == 2) return f.dtt() * g.v - 2.0 * f.dt() * g.dt() + f.v * g.dtt();
  assert(false && "jet path handles m+k <= 2");
  return {};
}

double binom(int n, int r) {
  double v = 1.0;
  for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
  return v;
}

// d^p/da^p of a function tabulated at a = -2h..2h (five samples, index 2 is
// the center).  4th order for p <= 2, 2nd order for p = 3, 4.
cplx stencil(const std::array<cplx, 5>& f, int p, double h) {
  switch (p) {
    case 0: return f[2];
    case 1: return (8.0 * (f[3] - f[1]) - (f[4] - f[0])) / (12.0 * h);
    case 2:
      return (-f[4] + 16.0 * f[3] - 30.0 * f[2] + 16.0 * f[1] - f[0]) /
             (12.0 * h * h);
    case 3: return (f[4] - 2.0 * f[3] + 2.0 * f[1] - f[0]) / (2.0 * h * h * h);
    case 4:
      return (f[4] - 4.0 * f[3] + 6.0 * f[2] - 4.0 * f[1] + f[0]) /
             (h * h * h * h);
  }
  assert(false);
  return {};
}

// D_x^p D_y^q f.g at (n,x,y) by finite differences of
// G(a,b) = f(x+a, y+b) g(x-a, y-b).
cplx hirota_xy_fd(int p, int q, const SeqField& f, const SeqField& g, int n,
                  double x, double y, double h) {
  std::array<cplx, 5> da;
  for (int ia = 0; ia < 5; ++ia) {
    const double a = (ia - 2) * h;
    std::array<cplx, 5> db;
    for (int ib = 0; ib < 5; ++ib) {
      const double b = (ib - 2) * h;
      db[ib] = f(n, x + a, y + b) * g(n, x - a, y - b);
    }
    da[ia] = stencil(db, q, h);
  }
  return stencil(da, p, h);
}

}  // namespace

Residual make_residual(cplx value, const SitePoint& p) {
  return Residual{value, std::abs(value), p};
}

// Product-form identities cancel terms of size ~ tau^4; the meaningful
// residual is relative to the largest cancelled term, floored at 1.
static Residual make_residual_scaled(cplx value, double scale,
                                     const SitePoint& p) {
  const double mag = std::abs(value) / std::max(1.0, scale);
  return Residual{value, mag, p};
}

cplx hirota_D(int m, int k, const SeqField& f, const SeqField& g,
              const SitePoint& p, double* fd_step) {
  if (m + k <= 2) {
    if (fd_step) *fd_step = 0.0;
    return hirota_from_jets(m, k, f.jet(p), g.jet(p));
  }
  // D_s^m D_t^k = 2^-(m+k) (D_x - i D_y)^m (D_x + i D_y)^k.
  const double h = 1e-2;
  if (fd_step) *fd_step = h;
  cplx acc = 0.0;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= k; ++j) {
      const cplx coef = binom(m, i) * binom(k, j) *
                        std::pow(-iu, double(m - i)) * std::pow(iu, double(k - j));
      acc += coef * hirota_xy_fd(i + j, (m - i) + (k - j), f, g, p.n, p.x, p.y, h);
    }
  }
  return acc * std::pow(0.5, double(m + k));
}

cplx hirota_D_tau(int m, int k, Family f, Family g, const SitePoint& p) {
  assert(m + k <= 2);
  const SeqField ff = tau_field(f), gf = tau_field(g);
  return hirota_from_jets(m, k, ff.jet(p), gf.jet(p));
}

Residual toda_residual(const SeqField& q, const SitePoint& p) {
  const Jet2 j = q.jet(p);
  const cplx qm = q(p.n - 1, p.x, p.y);
  const cplx qp = q(p.n + 1, p.x, p.y);
  const cplx r = 0.25 * j.lap() - std::exp(qm - j.v) + std::exp(j.v - qp);
  return make_residual(r, p);
}

Residual bilinear_residual(Family family, const SitePoint& p) {
  const cplx d = hirota_D_tau(1, 1, family, family, p);
  const cplx t = eval_tau(family, p).value;
  const cplx tp = eval_tau(family, {p.n + 1, p.x, p.y}).value;
  const cplx tm = eval_tau(family, {p.n - 1, p.x, p.y}).value;
  const double scale = std::max({std::abs(d), 2.0 * std::abs(tp * tm),
                                 2.0 * std::abs(t * t)});
  return make_residual_scaled(d - 2.0 * (tp * tm - t * t), scale, p);
}

Residual exchange_identity_residual(Family tau, Family tau_prime, cplx lam,
                                    const SitePoint& p) {
  const cplx li = 1.0 / lam;
  const SitePoint pp{p.n + 1, p.x, p.y}, pm{p.n - 1, p.x, p.y};
  const TauJet a = eval_tau(tau, p), ap = eval_tau(tau, pp), am = eval_tau(tau, pm);
  const TauJet b = eval_tau(tau_prime, p), bp = eval_tau(tau_prime, pp),
               bm = eval_tau(tau_prime, pm);

  auto dsdt_self = [](const TauJet& t, const TauJet& tp1, const TauJet& tm1) {
    const cplx d = 2.0 * (t.value * t.d_st - t.d_s * t.d_t);
    return d - 2.0 * tp1.value * tm1.value + 2.0 * t.value * t.value;
  };
  const cplx half_P = 0.5 * (dsdt_self(a, ap, am) * b.value * b.value -
                             dsdt_self(b, bp, bm) * a.value * a.value);

  // A = tau_s tau' - tau tau'_s - lam tau_+ tau'_- + lam tau tau'
  const cplx A_t = a.d_st * b.value + a.d_s * b.d_t - a.d_t * b.d_s -
                   a.value * b.d_st -
                   lam * (ap.d_t * bm.value + ap.value * bm.d_t) +
                   lam * (a.d_t * b.value + a.value * b.d_t);
  const cplx A = a.d_s * b.value - a.value * b.d_s - lam * ap.value * bm.value +
                 lam * a.value * b.value;
  const cplx B = b.value * a.value;
  const cplx B_t = b.d_t * a.value + b.value * a.d_t;
  const cplx term1 = A_t * B - A * B_t;

  const cplx term2 =
      lam *
      (ap.d_t * b.value - ap.value * b.d_t + li * a.value * bp.value -
       li * ap.value * b.value) *
      bm.value * a.value;
  const cplx term3 =
      lam *
      (a.d_t * bm.value - a.value * bm.d_t + li * am.value * b.value -
       li * a.value * bm.value) *
      b.value * ap.value;

  const double scale = std::max({std::abs(half_P), std::abs(term1),
                                 std::abs(term2), std::abs(term3)});
  return make_residual_scaled(half_P - (term1 + term2 - term3), scale, p);
}

std::pair<Residual, Residual> backlund_residual(Family from, Family to,
                                                cplx lam, const SitePoint& p) {
  const SitePoint pp{p.n + 1, p.x, p.y}, pm{p.n - 1, p.x, p.y};
  const TauJet f = eval_tau(from, p), fp = eval_tau(from, pp);
  const TauJet g = eval_tau(to, p), gp = eval_tau(to, pp), gm = eval_tau(to, pm);

  const cplx r1 = (f.d_s * g.value - f.value * g.d_s) -
                  lam * (fp.value * gm.value - f.value * g.value);
  const double s1 =
      std::max({std::abs(f.d_s * g.value), std::abs(f.value * g.d_s),
                std::abs(lam * fp.value * gm.value),
                std::abs(lam * f.value * g.value)});
  const cplx r2 = (fp.d_t * g.value - fp.value * g.d_t) +
                  (1.0 / lam) * (f.value * gp.value - fp.value * g.value);
  const double s2 =
      std::max({std::abs(fp.d_t * g.value), std::abs(fp.value * g.d_t),
                std::abs(f.value * gp.value / lam),
                std::abs(fp.value * g.value / lam)});
  return {make_residual_scaled(r1, s1, p), make_residual_scaled(r2, s2, p)};
}

std::pair<Residual, Residual> backlund_residual_b1(const SitePoint& p) {
  return backlund_residual(Family::Kappa, Family::Omega, lambda, p);
}

std::pair<Residual, Residual> backlund_residual_b2(const SitePoint& p) {
  return backlund_residual(Family::Omega, Family::Theta, lambda_inv, p);
}

}  // namespace toda
