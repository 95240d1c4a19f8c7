#include "toda/lump.hpp"

#include <cmath>

namespace toda {

namespace {

// Partials of ln theta_n through third order, u = 2*sqrt2*x + n.
struct LogThetaJet {
  double v;
  double x, y;
  double xx, xy, yy;
  double xxx, xxy, xyy, yyy;
};

LogThetaJet log_theta_jet(int n, double x, double y) {
  const double u = 2.0 * sqrt2 * x + n;
  const double t = u * u + 4.0 * y * y + 0.25;
  const double t2 = t * t, t3 = t2 * t;
  LogThetaJet j;
  j.v = std::log(t);
  j.x = 4.0 * sqrt2 * u / t;
  j.y = 8.0 * y / t;
  j.xx = 16.0 / t - 32.0 * u * u / t2;
  j.xy = -32.0 * sqrt2 * u * y / t2;
  j.yy = 8.0 / t - 64.0 * y * y / t2;
  j.xxx = -192.0 * sqrt2 * u / t2 + 256.0 * sqrt2 * u * u * u / t3;
  j.xxy = -128.0 * y / t2 + 512.0 * u * u * y / t3;
  j.xyy = -32.0 * sqrt2 * u / t2 + 512.0 * sqrt2 * u * y * y / t3;
  j.yyy = -192.0 * y / t2 + 1024.0 * y * y * y / t3;
  return j;
}

}  // namespace

double theta_val(int n, double x, double y) {
  const double u = 2.0 * sqrt2 * x + n;
  return u * u + 4.0 * y * y + 0.25;
}

double eval_lump(const SitePoint& p) {
  return std::log(theta_val(p.n - 1, p.x, p.y) / theta_val(p.n, p.x, p.y));
}

double dx_log_theta(int n, double x, double y) {
  return log_theta_jet(n, x, y).x;
}

double dy_log_theta(int n, double x, double y) {
  return log_theta_jet(n, x, y).y;
}

double hop_coeff_minus(int n, double x, double y) {
  const double tm1 = theta_val(n - 1, x, y);
  return theta_val(n - 2, x, y) * theta_val(n, x, y) / (tm1 * tm1);
}

double hop_coeff_plus(int n, double x, double y) {
  const double t0 = theta_val(n, x, y);
  return theta_val(n - 1, x, y) * theta_val(n + 1, x, y) / (t0 * t0);
}

SeqField lump_field() {
  return SeqField(
      [](int n, double x, double y) { return cplx(eval_lump({n, x, y})); },
      [](int n, double x, double y) {
        const LogThetaJet a = log_theta_jet(n - 1, x, y);
        const LogThetaJet b = log_theta_jet(n, x, y);
        Jet2 j;
        j.v = a.v - b.v;
        j.dx = a.x - b.x;
        j.dy = a.y - b.y;
        j.dxx = a.xx - b.xx;
        j.dyy = a.yy - b.yy;
        j.dxy = a.xy - b.xy;
        return j;
      },
      /*traveling=*/true);
}

SeqField kernel_field(Direction dir) {
  const bool along_x = (dir == Direction::x);
  auto jet = [along_x](int n, double x, double y) {
    const LogThetaJet a = log_theta_jet(n - 1, x, y);
    const LogThetaJet b = log_theta_jet(n, x, y);
    Jet2 j;
    if (along_x) {
      j.v = a.x - b.x;
      j.dx = a.xx - b.xx;
      j.dy = a.xy - b.xy;
      j.dxx = a.xxx - b.xxx;
      j.dxy = a.xxy - b.xxy;
      j.dyy = a.xyy - b.xyy;
    } else {
      j.v = a.y - b.y;
      j.dx = a.xy - b.xy;
      j.dy = a.yy - b.yy;
      j.dxx = a.xxy - b.xxy;
      j.dxy = a.xyy - b.xyy;
      j.dyy = a.yyy - b.yyy;
    }
    return j;
  };
  return SeqField(
      [jet](int n, double x, double y) { return jet(n, x, y).v; }, jet,
      /*traveling=*/true);
}

VFieldRecord v_field_and_substitutions(const SitePoint& p) {
  VFieldRecord rec;
  const double t = theta_val(p.n, p.x, p.y);
  rec.r_n = std::log(theta_val(p.n - 1, p.x, p.y) * theta_val(p.n + 1, p.x, p.y) /
                     (t * t));
  rec.r_literal = eval_lump({p.n - 1, p.x, p.y}) - eval_lump({p.n, p.x, p.y});
  rec.V_n = std::expm1(rec.r_n);
  const double u = 2.0 * sqrt2 * p.x + p.n;
  const double N = 24.0 * t - 32.0 * u * u - 64.0 * p.y * p.y;
  rec.dst_log_tau = N / (4.0 * t * t);
  return rec;
}

}  // namespace toda
