#include "toda/symbols.hpp"

#include <cmath>

namespace toda {

SymbolParams SymbolParams::make(int n, double y) {
  SymbolParams p;
  p.n = n;
  p.y = y;
  p.alpha = n / (2.0 * sqrt2);
  p.beta = std::sqrt(y * y / 2.0 + 1.0 / 32.0);
  p.b = -y / 2.0;
  p.c = delta;
  p.alpha1 = p.alpha - p.c;
  p.alpha0 = (n + 0.5 * (sqrt2 - 1.0)) / (2.0 * sqrt2);
  p.beta0 = std::abs(y) / sqrt2;
  p.A1 = 0.5 - p.b / (2.0 * p.beta);
  p.A2 = -(lambda / sqrt2) * (0.5 - sqrt2 / (16.0 * p.beta * iu));
  p.A3 = -(0.5 + p.b / (2.0 * p.beta));
  p.A4 = (lambda / sqrt2) * (0.5 + sqrt2 / (16.0 * p.beta * iu));
  p.gamma = p.A4 / (p.A1 * lambda * lambda);
  p.gamma_star = p.A2 / (p.A3 * lambda * lambda);
  return p;
}

namespace {

struct Eval {
  SymbolParams par;

  cplx E(cplx xi) const { return std::exp(2.0 * pi * iu * par.c * xi); }

  cplx P(cplx xi) const {
    const cplx e = E(xi);
    return (2.0 * pi * iu * xi - 2.0 - lambda_inv * e + lambda / e) /
           (2.0 * pi * iu);
  }

  cplx Q(cplx xi) const {
    const cplx e = E(xi);
    return (1.0 - par.gamma * e) * (par.A1 + par.A2 / e) -
           (1.0 - par.gamma_star * e) * (par.A3 + par.A4 / e);
  }

  // K and K' of the bracket factor of J; K(0) = 0 exactly, subtracted off to
  // keep the zeros at the lattice 2*sqrt2*Z clean in floating point.
  cplx K_raw(cplx e) const {
    return (par.gamma - par.gamma_star) * iu * par.c * e -
           2.0 * par.beta * (1.0 - par.gamma * e) * (1.0 - par.gamma_star * e);
  }
  cplx K(cplx xi) const { return K_raw(E(xi)) - K_raw(1.0); }
  cplx Kp(cplx xi) const {
    const cplx e = E(xi);
    const cplx ep = 2.0 * pi * iu * par.c * e;  // dE/dxi
    return (par.gamma - par.gamma_star) * iu * par.c * ep -
           2.0 * par.beta *
               (-par.gamma * ep * (1.0 - par.gamma_star * e) -
                par.gamma_star * ep * (1.0 - par.gamma * e));
  }

  cplx J(cplx xi) const {
    const cplx e = E(xi);
    const cplx d = 1.0 - par.gamma * e;
    return 2.0 * pi * std::exp(-4.0 * pi * par.beta * xi) / (d * d) * K(xi);
  }

  cplx JlogD(cplx xi) const {  // J'/J
    const cplx e = E(xi);
    return -4.0 * pi * par.beta +
           2.0 * par.gamma * 2.0 * pi * iu * par.c * e /
               (1.0 - par.gamma * e) +
           Kp(xi) / K(xi);
  }

  cplx R(cplx xi) const {
    const cplx e = E(xi);
    return (1.0 - par.gamma * e) * (par.A3 + par.A4 / e) *
           std::exp(4.0 * pi * par.beta * xi);
  }

  cplx Q1(cplx xi) const { return Q(xi) - P(xi) * JlogD(xi); }
  cplx R1(cplx xi) const { return R(xi) * J(xi); }

  cplx P0(cplx xi) const {
    const cplx e = E(xi);
    return 2.0 * pi * iu * xi - lambda * (e - 1.0) - lambda_inv * (1.0 - 1.0 / e);
  }
  cplx Q0(cplx xi) const {
    const cplx e = E(xi);
    const cplx k = pi * iu / sqrt2;
    return -lambda * k * (e - 1.0) + lambda_inv * k * (1.0 - 1.0 / e);
  }
};

}  // namespace

Symbols symbols(int n, double y) {
  Symbols s;
  s.par = SymbolParams::make(n, y);
  const Eval ev{s.par};

  s.P = {[ev](double xi) { return ev.P(xi); }, {}};
  s.Q = {[ev](double xi) { return ev.Q(xi); }, {}};
  s.J = {[ev](double xi) { return ev.J(xi); }, {}};
  s.R = {[ev](double xi) { return ev.R(xi); }, {}};
  s.P1 = s.P;
  // Q1 is removable at 0 (limit 0) and genuinely singular at the other zeros
  // of J, the lattice points 2*sqrt2*j.
  std::vector<double> q1_sing;
  for (int j = 1; j <= 40; ++j) q1_sing.push_back(2.0 * sqrt2 * j);
  s.Q1 = {[ev](double xi) { return xi == 0.0 ? cplx(0.0) : ev.Q1(xi); },
          q1_sing};
  s.R1 = {[ev](double xi) { return ev.R1(xi); }, {}};
  s.P0 = {[ev](double xi) { return ev.P0(xi); }, {}};
  s.Q0 = {[ev](double xi) { return ev.Q0(xi); }, {}};
  s.Jprime = [ev](double xi) { return ev.J(xi) * ev.JlogD(xi); };

  s.Pc = [ev](cplx z) { return ev.P(z); };
  s.Q1c = [ev](cplx z) { return ev.Q1(z); };
  s.R1c = [ev](cplx z) { return ev.R1(z); };
  s.P0c = [ev](cplx z) { return ev.P0(z); };
  s.Q0c = [ev](cplx z) { return ev.Q0(z); };
  return s;
}

std::vector<double> j_zeros(const SymbolParams& par, double xi_max) {
  const Eval ev{par};
  std::vector<double> zeros;
  for (int j = 1; 2.0 * sqrt2 * j <= xi_max + 0.5; ++j) {
    double s = 2.0 * sqrt2 * j;
    const double lo = s - 0.5, hi = s + 0.5;
    for (int it = 0; it < 60; ++it) {
      const cplx k = ev.K(s), kp = ev.Kp(s);
      const double step = std::real(std::conj(k) * kp) / std::norm(kp);
      s -= step;
      if (s < lo) s = lo;
      if (s > hi) s = hi;
      if (std::abs(step) < 1e-15) break;
    }
    if (s <= xi_max) zeros.push_back(s);
  }
  return zeros;
}

}  // namespace toda
