#pragma once
#include "toda/field.hpp"
#include "toda/lump.hpp"

namespace toda {

struct Residual {
  cplx value{};
  double magnitude = 0.0;
  SitePoint at{};
};

Residual make_residual(cplx value, const SitePoint& p);

// Bilinear derivative D_s^m D_t^k f.g.  Orders with m+k <= 2 use analytic
// jets; higher orders fall back to Richardson finite differences of the
// defining antisymmetrized derivative (step reported via *fd_step).
cplx hirota_D(int m, int k, const SeqField& f, const SeqField& g,
              const SitePoint& p, double* fd_step = nullptr);

// Same, with both factors a tau family (exact jets, no fallback; m+k <= 2).
cplx hirota_D_tau(int m, int k, Family f, Family g, const SitePoint& p);

// (1/4) Lap q_n - e^{q_{n-1}-q_n} + e^{q_n-q_{n+1}}.
Residual toda_residual(const SeqField& q, const SitePoint& p);

// D_sD_t tau.tau - 2(tau_{n+1}tau_{n-1} - tau_n^2).
Residual bilinear_residual(Family family, const SitePoint& p);

// (1/2)P minus the three-term product identity, all D-products expanded
// analytically; holds for every tau pair and every lambda.
Residual exchange_identity_residual(Family tau, Family tau_prime, cplx lam,
                                    const SitePoint& p);

// Backlund system residuals in multiplied-out product form (no divisions, so
// omega zeros are harmless).  General version exposes the pair and lambda.
std::pair<Residual, Residual> backlund_residual(Family from, Family to,
                                                cplx lam, const SitePoint& p);
std::pair<Residual, Residual> backlund_residual_b1(const SitePoint& p);
std::pair<Residual, Residual> backlund_residual_b2(const SitePoint& p);

}  // namespace toda
