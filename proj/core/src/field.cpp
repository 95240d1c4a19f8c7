#include "toda/field.hpp"

namespace toda {

namespace {

Jet2 from_tau_jet(const TauJet& t) {
  Jet2 j;
  j.v = t.value;
  j.dx = t.d_s + t.d_t;
  j.dy = iu * (t.d_s - t.d_t);
  j.dxx = t.d_ss + 2.0 * t.d_st + t.d_tt;
  j.dyy = -t.d_ss + 2.0 * t.d_st - t.d_tt;
  j.dxy = (t.d_tt - t.d_ss) / iu;
  return j;
}

}  // namespace

Jet2 fd_jet(const SeqField::Eval& f, int n, double x, double y, double h) {
  auto F = [&](double dx, double dy) { return f(n, x + dx, y + dy); };
  const cplx f0 = F(0, 0);
  const cplx fxp = F(h, 0), fxm = F(-h, 0), fxp2 = F(2 * h, 0), fxm2 = F(-2 * h, 0);
  const cplx fyp = F(0, h), fym = F(0, -h), fyp2 = F(0, 2 * h), fym2 = F(0, -2 * h);

  Jet2 j;
  j.v = f0;
  j.dx = (8.0 * (fxp - fxm) - (fxp2 - fxm2)) / (12.0 * h);
  j.dy = (8.0 * (fyp - fym) - (fyp2 - fym2)) / (12.0 * h);
  j.dxx = (-fxp2 + 16.0 * fxp - 30.0 * f0 + 16.0 * fxm - fxm2) / (12.0 * h * h);
  j.dyy = (-fyp2 + 16.0 * fyp - 30.0 * f0 + 16.0 * fym - fym2) / (12.0 * h * h);
  j.dxy = (F(h, h) - F(h, -h) - F(-h, h) + F(-h, -h)) / (4.0 * h * h);
  return j;
}

Jet2 SeqField::jet(int n, double x, double y) const {
  if (jet_) return jet_(n, x, y);
  return fd_jet(eval_, n, x, y);
}

SeqField SeqField::zero() { return constant(0.0); }

SeqField SeqField::constant(cplx c) {
  return SeqField([c](int, double, double) { return c; },
                  [c](int, double, double) { Jet2 j; j.v = c; return j; },
                  /*traveling=*/true);
}

SeqField tau_field(Family family) {
  return SeqField(
      [family](int n, double x, double y) {
        return eval_tau(family, {n, x, y}).value;
      },
      [family](int n, double x, double y) {
        return from_tau_jet(eval_tau(family, {n, x, y}));
      },
      /*traveling=*/true);
}

}  // namespace toda
