#pragma once
#include "toda/field.hpp"

namespace toda {

// theta_n(x,y) as a plain real number (>= 1/4).
double theta_val(int n, double x, double y);

// The lump: Q_n = ln(theta_{n-1}/theta_n).
double eval_lump(const SitePoint& p);

// d/dx ln theta_n and d/dy ln theta_n (real closed forms).
double dx_log_theta(int n, double x, double y);
double dy_log_theta(int n, double x, double y);

// e^{Q_{n-1}-Q_n} = theta_{n-2} theta_n / theta_{n-1}^2 (positive closed form).
double hop_coeff_minus(int n, double x, double y);
// e^{Q_n-Q_{n+1}} = theta_{n-1} theta_{n+1} / theta_n^2.
double hop_coeff_plus(int n, double x, double y);

// The lump as a SeqField with exact jets.
SeqField lump_field();

// Translation kernel fields dxQ_n, dyQ_n with exact jets (including exact
// Laplacian; decay O(r^-2)).
enum class Direction { x, y };
SeqField kernel_field(Direction dir);

// tau-substitution chain record at one site.
struct VFieldRecord {
  double r_n;            // Q_n - Q_{n+1}; aligns q of the substitution chain
  double r_literal;      // Q_{n-1} - Q_n, the other index reading
  double V_n;            // e^{r_n} - 1 = theta_{n+1}theta_{n-1}/theta_n^2 - 1
  double dst_log_tau;    // d_s d_t ln theta_n = (Laplacian of ln theta_n)/4
};
VFieldRecord v_field_and_substitutions(const SitePoint& p);

}  // namespace toda
