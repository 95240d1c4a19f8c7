#include "toda/tau.hpp"

namespace toda {

TauJet eval_tau(Family family, const SitePoint& p) {
  TauJet j;
  const double u = 2.0 * sqrt2 * p.x + p.n;
  switch (family) {
    case Family::Kappa:
      j.value = 1.0;
      break;
    case Family::Omega:
      // omega = lambda s + lambda^-1 t + n + (sqrt2-1)/2
      j.value = u + 2.0 * iu * p.y + 0.5 * (sqrt2 - 1.0);
      j.d_s = lambda;
      j.d_t = lambda_inv;
      break;
    case Family::Theta:
      // theta = u^2 + 4y^2 + 1/4; quadratic in (s,t): d_ss = d_tt = 2, d_st = 6
      j.value = u * u + 4.0 * p.y * p.y + 0.25;
      j.d_s = 2.0 * sqrt2 * u - 4.0 * iu * p.y;
      j.d_t = 2.0 * sqrt2 * u + 4.0 * iu * p.y;
      j.d_ss = 2.0;
      j.d_st = 6.0;
      j.d_tt = 2.0;
      break;
  }
  return j;
}

const char* family_name(Family family) {
  switch (family) {
    case Family::Kappa: return "kappa";
    case Family::Omega: return "omega";
    case Family::Theta: return "theta";
  }
  return "?";
}

}  // namespace toda
