#pragma once
#include <Eigen/SparseCore>
#include <vector>

#include "toda/constants.hpp"

namespace toda {

// Uniform Dirichlet grid on [-L, L]^2 with spacing h = delta/k, so the
// traveling shift delta is exactly k grid columns.  L is rounded to a
// multiple of h.
struct GridSpec {
  double half_width = 12.0;  // requested L
  int refine = 4;            // k >= 2

  double h() const { return delta / refine; }
  int m() const;             // intervals per side (even)
  int nx() const { return m() + 1; }
  double L() const { return 0.5 * h() * m(); }
  double x_at(int i) const { return -L() + h() * i; }
  long dim() const { return static_cast<long>(nx()) * nx(); }
  long idx(int i, int j) const { return static_cast<long>(i) * nx() + j; }
};

struct DiscreteOperator {
  GridSpec grid;
  Eigen::SparseMatrix<double, Eigen::RowMajor> A;  // dim x dim
};

// Interior rows: (1/4) Lap_h U - a_-(x,y)(U(x-delta,y) - U) + a_+(x,y)(U -
// U(x+delta,y)) with a_- = e^{Q_{-1}-Q_0}, a_+ = e^{Q_0-Q_1}; boundary rows
// identity (Dirichlet).  Shifted couplings falling outside the box are
// dropped (homogeneous Dirichlet).
DiscreteOperator assemble(const GridSpec& grid);

struct KernelReport {
  GridSpec grid;
  std::vector<double> singular_values;            // ascending
  std::vector<std::vector<double>> kernel_vectors;  // unit norm, grid order
  std::vector<double> correlations;  // |<v_i, m_j>| matrix vs dxQ/dyQ modes
  std::vector<double> principal_angles;  // vs span{dxQ, dyQ}, radians
  double gap_ratio = 0.0;                // sigma3/sigma2
  std::uint64_t seed = 0;
  int iterations = 0;
  double elapsed_seconds = 0.0;
};

// Smallest `count` singular triplets of op via inverse subspace iteration on
// the normal matrix A^T A (sparse LDLT factorization); deterministic for a
// given seed.
KernelReport near_kernel(const DiscreteOperator& op, int count = 4,
                         double tol = 1e-10, std::uint64_t seed = 12345);

struct ConvergenceRow {
  double h, L;
  std::vector<double> sigma;
  std::vector<double> angles;
};
std::vector<ConvergenceRow> convergence_study(const std::vector<GridSpec>& grids,
                                              std::uint64_t seed = 12345);

// sigma threshold model theta_small(h, L) = c1 h^2 + c2 / L^2; calibrated
// constants frozen from the convergence study.
double theta_small(double h, double L);

// Discretized kernel fields on the grid (boundary zeroed, unit norm).
std::vector<double> discrete_mode(const GridSpec& grid, bool x_direction);

// Interior max-norm of op applied to the discretized mode (truncation
// residual; O(h^2) once the core is resolved).
double mode_interior_residual(const DiscreteOperator& op, bool x_direction);

// Principal angles between span(v1, v2) and span{dxQ, dyQ} on the grid.
std::vector<double> principal_angles_vs_modes(const GridSpec& grid,
                                              const std::vector<double>& v1,
                                              const std::vector<double>& v2);

}  // namespace toda
