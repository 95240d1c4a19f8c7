#pragma once
#include <stdexcept>

#include "toda/hirota.hpp"

namespace toda {

enum class OperatorTag {
  T_kappa, T_omega, T_theta,
  F1, M1, G1, N1,
  F0, M0, G0, N0,
  F0star, M0star, F1star, M1star,
};

// Input role of a SeqField argument.  The four family-0/1 operators are
// shape-alike; passing a field under the wrong role is a contract violation
// and throws, never silently evaluates.
enum class Role { Phi, Eta, Sigma };

struct NearPoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linearized bilinear operator T_tau at a closed-form tau family:
//   (T_tau eta)_n = eta_st tau - eta_s tau_t - eta_t tau_s + eta tau_st
//                   - (eta_{n+1} tau_{n-1} + tau_{n+1} eta_{n-1} - 2 tau eta)
cplx apply_T(Family family, const SeqField& eta, const SitePoint& p);

// (1/4) Lap U_n - e^{Q_{n-1}-Q_n}(U_{n-1}-U_n) + e^{Q_n-Q_{n+1}}(U_n-U_{n+1})
Residual linearized_toda_residual(const SeqField& U, const SitePoint& p);

// F1/M1 act on phi-role fields, G1/N1 on eta-role fields; theta never
// vanishes so there is no pole here.
cplx apply_family1(OperatorTag tag, const SeqField& field, Role role,
                   const SitePoint& p);

// F0/M0 act on sigma-role, G0/N0 on phi-role.  These divide by omega;
// |omega| below pole_tol throws NearPoleError.
cplx apply_family0(OperatorTag tag, const SeqField& field, Role role,
                   const SitePoint& p, double pole_tol = 1e-6);

// Bilinear-style starred operators (no divisions).
cplx apply_starred(OperatorTag tag, const SeqField& field, const SitePoint& p);

// Residuals of the two sum/difference identities relating the first-order
// system in (sigma, phi) to F0*/M0*:
//   d_x phi_n - 2 phi_n + lambda phi_{n-1} - lambda^{-1} phi_{n+1}
//       = (F0* sigma)_n + (M0* sigma)_n,
//   (1/i) d_y phi_n - 2 sqrt2 phi_n + lambda phi_{n-1} + lambda^{-1} phi_{n+1}
//       = (F0* sigma)_n - (M0* sigma)_n.
std::pair<Residual, Residual> identity_L3_residual(const SeqField& sigma,
                                                   const SeqField& phi,
                                                   const SitePoint& p);

// Residuals of the corresponding pair relating eta to F1*/M1* (divides by
// omega_n and omega_{n+1}).
std::pair<Residual, Residual> identity_L4_residual(const SeqField& phi,
                                                   const SeqField& eta,
                                                   const SitePoint& p,
                                                   double pole_tol = 1e-6);

// Explicit solution pairs of the first-order system:
//   sigma_n = 2 sqrt2 x + n   <->  phi = u^2 + 2iy u + (1-sqrt2) iy, u = 2 sqrt2 x + n
//   sigma_n = y               <->  phi = u y + ((sqrt2-1)/2) y
SeqField pair_sigma_linear();
SeqField pair_phi_quadratic();
SeqField pair_sigma_y();
SeqField pair_phi_bilinear();

// eta_n = 2 sqrt2 x + n + 2iy (kernel of the homogeneous L4 identities).
SeqField eta_kernel_linear();

}  // namespace toda
