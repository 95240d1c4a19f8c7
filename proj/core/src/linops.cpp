#include "toda/linops.hpp"

#include <cmath>
#include <stdexcept>

namespace toda {

namespace {

cplx omega_at(int n, double x, double y) {
  return eval_tau(Family::Omega, {n, x, y}).value;
}

void require_role(Role have, Role need, const char* op) {
  if (have != need)
    throw std::invalid_argument(std::string(op) + ": wrong input role");
}

void check_pole(cplx w, double tol) {
  if (std::abs(w) < tol) throw NearPoleError("evaluation point too close to an omega zero");
}

}  // namespace

cplx apply_T(Family family, const SeqField& eta, const SitePoint& p) {
  const TauJet t = eval_tau(family, p);
  const cplx tp = eval_tau(family, {p.n + 1, p.x, p.y}).value;
  const cplx tm = eval_tau(family, {p.n - 1, p.x, p.y}).value;
  const Jet2 e = eta.jet(p);
  const cplx ep = eta(p.n + 1, p.x, p.y);
  const cplx em = eta(p.n - 1, p.x, p.y);
  return e.dst() * t.value - e.ds() * t.d_t - e.dt() * t.d_s + e.v * t.d_st -
         (ep * tm + tp * em - 2.0 * t.value * e.v);
}

Residual linearized_toda_residual(const SeqField& U, const SitePoint& p) {
  const Jet2 j = U.jet(p);
  const cplx um = U(p.n - 1, p.x, p.y);
  const cplx up = U(p.n + 1, p.x, p.y);
  const double am = hop_coeff_minus(p.n, p.x, p.y);
  const double ap = hop_coeff_plus(p.n, p.x, p.y);
  return make_residual(0.25 * j.lap() - am * (um - j.v) + ap * (j.v - up), p);
}

cplx apply_family1(OperatorTag tag, const SeqField& field, Role role,
                   const SitePoint& p) {
  const TauJet th = eval_tau(Family::Theta, p);
  const TauJet thm = eval_tau(Family::Theta, {p.n - 1, p.x, p.y});
  const cplx thp = eval_tau(Family::Theta, {p.n + 1, p.x, p.y}).value;

  if (tag == OperatorTag::F1 || tag == OperatorTag::M1) {
    require_role(role, Role::Phi, "apply_family1");
    const Jet2 f = field.jet(p);
    const cplx fp = field(p.n + 1, p.x, p.y);
    const cplx fm = field(p.n - 1, p.x, p.y);
    const cplx rs = th.d_s / th.value;
    const cplx rt = thm.d_t / thm.value;
    if (tag == OperatorTag::F1)
      return f.dx - (rs + rt + 2.0) * f.v -
             lambda_inv * (thm.value / th.value) * fp +
             lambda * (th.value / thm.value) * fm;
    return -iu * f.dy - (rs - rt - 2.0 * sqrt2) * f.v -
           lambda_inv * fp * thm.value / th.value -
           lambda * fm * th.value / thm.value;
  }

  if (tag == OperatorTag::G1 || tag == OperatorTag::N1) {
    require_role(role, Role::Eta, "apply_family1");
    const TauJet w = eval_tau(Family::Omega, p);
    const cplx wp = omega_at(p.n + 1, p.x, p.y);
    const cplx wm = omega_at(p.n - 1, p.x, p.y);
    const Jet2 e = field.jet(p);
    const Jet2 em = field.jet(p.n - 1, p.x, p.y);
    const double sgn = (tag == OperatorTag::G1) ? 1.0 : -1.0;
    return (w.value / th.value) * e.ds() + sgn * (w.value / thm.value) * em.dt() +
           (-w.d_s / th.value - lambda_inv * w.value / th.value -
            sgn * lambda * wm / thm.value) *
               e.v +
           (lambda * wp / th.value - sgn * w.d_t / thm.value +
            sgn * lambda * w.value / thm.value) *
               em.v;
  }
  throw std::invalid_argument("apply_family1: tag is not a family-1 operator");
}

cplx apply_family0(OperatorTag tag, const SeqField& field, Role role,
                   const SitePoint& p, double pole_tol) {
  const cplx w = omega_at(p.n, p.x, p.y);
  const cplx wm = omega_at(p.n - 1, p.x, p.y);
  check_pole(w, pole_tol);
  check_pole(wm, pole_tol);

  if (tag == OperatorTag::F0 || tag == OperatorTag::M0) {
    require_role(role, Role::Sigma, "apply_family0");
    const Jet2 s = field.jet(p);
    const cplx sp = field(p.n + 1, p.x, p.y);
    const cplx sm = field(p.n - 1, p.x, p.y);
    const cplx hop_up = lambda * (wm / w) * (sp - s.v);
    const cplx hop_dn = lambda_inv * (w / wm) * (s.v - sm);
    if (tag == OperatorTag::F0) return s.dx - hop_up - hop_dn;
    return -iu * s.dy - hop_up + hop_dn;
  }

  if (tag == OperatorTag::G0 || tag == OperatorTag::N0) {
    require_role(role, Role::Phi, "apply_family0");
    const Jet2 f = field.jet(p);
    const Jet2 fm = field.jet(p.n - 1, p.x, p.y);
    const cplx first = (f.ds() + lambda * (fm.v - f.v)) / w;
    const cplx second = (fm.dt() - lambda_inv * (f.v - fm.v)) / wm;
    return (tag == OperatorTag::G0) ? first + second : first - second;
  }
  throw std::invalid_argument("apply_family0: tag is not a family-0 operator");
}

cplx apply_starred(OperatorTag tag, const SeqField& field, const SitePoint& p) {
  const SitePoint pp{p.n + 1, p.x, p.y}, pm{p.n - 1, p.x, p.y};
  switch (tag) {
    case OperatorTag::F0star: {
      const TauJet w = eval_tau(Family::Omega, p);
      const cplx wm = omega_at(pm.n, p.x, p.y);
      const Jet2 s = field.jet(p);
      const cplx sp = field(pp);
      return s.ds() * w.value - s.v * w.d_s - lambda * (sp * wm - s.v * w.value);
    }
    case OperatorTag::M0star: {
      const TauJet w = eval_tau(Family::Omega, p);
      const cplx wp = omega_at(pp.n, p.x, p.y);
      const Jet2 sp = field.jet(pp);
      const cplx s0 = field(p);
      return sp.dt() * w.value - sp.v * w.d_t +
             lambda_inv * (s0 * wp - sp.v * w.value);
    }
    case OperatorTag::F1star: {
      const TauJet t = eval_tau(Family::Theta, p);
      const cplx tm = eval_tau(Family::Theta, pm).value;
      const Jet2 f = field.jet(p);
      const cplx fp = field(pp);
      return f.ds() * t.value - f.v * t.d_s -
             lambda_inv * (fp * tm - f.v * t.value);
    }
    case OperatorTag::M1star: {
      const TauJet t = eval_tau(Family::Theta, p);
      const cplx tp = eval_tau(Family::Theta, pp).value;
      const Jet2 fp = field.jet(pp);
      const cplx f0 = field(p);
      return fp.dt() * t.value - fp.v * t.d_t +
             lambda * (f0 * tp - fp.v * t.value);
    }
    default:
      throw std::invalid_argument("apply_starred: tag is not a starred operator");
  }
}

std::pair<Residual, Residual> identity_L3_residual(const SeqField& sigma,
                                                   const SeqField& phi,
                                                   const SitePoint& p) {
  const Jet2 f = phi.jet(p);
  const cplx fp = phi(p.n + 1, p.x, p.y);
  const cplx fm = phi(p.n - 1, p.x, p.y);
  const cplx Fs = apply_starred(OperatorTag::F0star, sigma, p);
  const cplx Ms = apply_starred(OperatorTag::M0star, sigma, p);
  const cplx r1 =
      f.dx - 2.0 * f.v + lambda * fm - lambda_inv * fp - (Fs + Ms);
  const cplx r2 =
      -iu * f.dy - 2.0 * sqrt2 * f.v + lambda * fm + lambda_inv * fp - (Fs - Ms);
  return {make_residual(r1, p), make_residual(r2, p)};
}

std::pair<Residual, Residual> identity_L4_residual(const SeqField& phi,
                                                   const SeqField& eta,
                                                   const SitePoint& p,
                                                   double pole_tol) {
  const cplx w = omega_at(p.n, p.x, p.y);
  const cplx wp = omega_at(p.n + 1, p.x, p.y);
  check_pole(w, pole_tol);
  check_pole(wp, pole_tol);
  const Jet2 e = eta.jet(p);
  const cplx ep = eta(p.n + 1, p.x, p.y);
  const cplx em = eta(p.n - 1, p.x, p.y);
  const cplx F1s = apply_starred(OperatorTag::F1star, phi, p);
  const cplx M1s = apply_starred(OperatorTag::M1star, phi, p);
  const cplx r1 = e.dx + (2.0 - lambda / w - lambda_inv / wp) * e.v +
                  (wp * lambda_inv / w) * em - (w * lambda / wp) * ep -
                  (F1s / w + M1s / wp);
  const cplx r2 = -iu * e.dy +
                  (-lambda / w + lambda_inv / wp - 2.0 * sqrt2) * e.v +
                  (wp * lambda_inv / w) * em + (w * lambda / wp) * ep -
                  (F1s / w - M1s / wp);
  return {make_residual(r1, p), make_residual(r2, p)};
}

SeqField pair_sigma_linear() {
  return SeqField(
      [](int n, double x, double) { return cplx(2.0 * sqrt2 * x + n); },
      [](int n, double x, double) {
        Jet2 j;
        j.v = 2.0 * sqrt2 * x + n;
        j.dx = 2.0 * sqrt2;
        return j;
      },
      /*traveling=*/true);
}

SeqField pair_phi_quadratic() {
  auto jet = [](int n, double x, double y) {
    const double u = 2.0 * sqrt2 * x + n;
    Jet2 j;
    j.v = u * u + 2.0 * iu * y * u + (1.0 - sqrt2) * iu * y;
    j.dx = 2.0 * sqrt2 * (2.0 * u + 2.0 * iu * y);
    j.dy = 2.0 * iu * u + (1.0 - sqrt2) * iu;
    j.dxx = 16.0;
    j.dxy = 4.0 * sqrt2 * iu;
    return j;
  };
  return SeqField([jet](int n, double x, double y) { return jet(n, x, y).v; },
                  jet, /*traveling=*/true);
}

SeqField pair_sigma_y() {
  return SeqField([](int, double, double y) { return cplx(y); },
                  [](int, double, double y) {
                    Jet2 j;
                    j.v = y;
                    j.dy = 1.0;
                    return j;
                  },
                  /*traveling=*/true);
}

SeqField pair_phi_bilinear() {
  auto jet = [](int n, double x, double y) {
    const double u = 2.0 * sqrt2 * x + n;
    Jet2 j;
    j.v = u * y + 0.5 * (sqrt2 - 1.0) * y + 2.0 * iu * y * y;
    j.dx = 2.0 * sqrt2 * y;
    j.dy = u + 0.5 * (sqrt2 - 1.0) + 4.0 * iu * y;
    j.dxy = 2.0 * sqrt2;
    j.dyy = 4.0 * iu;
    return j;
  };
  return SeqField([jet](int n, double x, double y) { return jet(n, x, y).v; },
                  jet, /*traveling=*/true);
}

SeqField eta_kernel_linear() {
  return SeqField(
      [](int n, double x, double y) {
        return cplx(2.0 * sqrt2 * x + n) + 2.0 * iu * y;
      },
      [](int n, double x, double y) {
        Jet2 j;
        j.v = cplx(2.0 * sqrt2 * x + n) + 2.0 * iu * y;
        j.dx = 2.0 * sqrt2;
        j.dy = 2.0 * iu;
        return j;
      },
      /*traveling=*/true);
}

}  // namespace toda
