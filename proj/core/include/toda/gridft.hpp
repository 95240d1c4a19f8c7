#pragma once
#include <functional>
#include <stdexcept>
#include <vector>

#include "toda/constants.hpp"

namespace toda {

// Periodic square grid on [-L, L)^2 with m points per side (FFT layout,
// x_j = -L + j h, h = 2L/m).
struct FTGrid {
  double L = 20.0;
  int m = 512;
  double h() const { return 2.0 * L / m; }
};

struct MultiplierError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output of the traveling-reduction multiplier solve at n = 0.
struct MultiplierResult {
  FTGrid grid;
  double mean_f = 0.0;          // integral of f_0 = (e^{Q_{-1}-Q_0}-1) v_0
  double mean_v = 0.0;
  std::vector<double> eta;      // eta-tilde, row-major m x m (i -> x, j -> y)
  double eta_imag_max = 0.0;    // spectral solve sanity
  double yi_interior_max = 0.0; // |(1/4) Lap_h eta - e^{Q_{-1}-Q_0} v| interior
  double interior_margin = 1.6; // distance from the box edge excluded
  double t_theta_rel = 0.0;     // relative T_theta residual of theta*eta
  bool mean_zero_ok = false;
};

// U(x, y) is the n = 0 slice of a traveling SeqField (U_{-1}(x,y) =
// U_0(x-delta,y) evaluated in closed form).  mean_tol gates the mean-zero
// assertion; when check_mean is set a violation throws MultiplierError
// (negative-control path: call with check_mean=false and read mean_f).
MultiplierResult multiplier_solve_eta_tilde(
    const std::function<double(int, double, double)>& U, const FTGrid& grid,
    double mean_tol = 1e-6, bool check_mean = true);

// Frequency symbol -pi^2 |xi|^2 + 2 - 2 cos(pi xi1/sqrt2); <= 0, zero only
// at the origin.
double multiplier_symbol(double xi1, double xi2);

}  // namespace toda
