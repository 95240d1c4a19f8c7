#include "toda/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

#include <chrono>
#include <cmath>
#include <random>

#include "toda/lump.hpp"

namespace toda {

int GridSpec::m() const {
  int mm = static_cast<int>(std::lround(2.0 * half_width / h()));
  if (mm % 2) ++mm;
  return mm;
}

DiscreteOperator assemble(const GridSpec& grid) {
  const int nx = grid.nx(), k = grid.refine;
  const double h = grid.h();
  const double inv4h2 = 1.0 / (4.0 * h * h);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(grid.dim()) * 7);
  for (int i = 0; i < nx; ++i) {
    const double x = grid.x_at(i);
    for (int j = 0; j < nx; ++j) {
      const double y = grid.x_at(j);
      const int r = static_cast<int>(grid.idx(i, j));
      if (i == 0 || j == 0 || i == nx - 1 || j == nx - 1) {
        trip.emplace_back(r, r, 1.0);
        continue;
      }
      const double am = hop_coeff_minus(0, x, y);
      const double ap = hop_coeff_plus(0, x, y);
      trip.emplace_back(r, r, -4.0 * inv4h2 + am + ap);
      trip.emplace_back(r, static_cast<int>(grid.idx(i - 1, j)), inv4h2);
      trip.emplace_back(r, static_cast<int>(grid.idx(i + 1, j)), inv4h2);
      trip.emplace_back(r, static_cast<int>(grid.idx(i, j - 1)), inv4h2);
      trip.emplace_back(r, static_cast<int>(grid.idx(i, j + 1)), inv4h2);
      if (i - k >= 0)
        trip.emplace_back(r, static_cast<int>(grid.idx(i - k, j)), -am);
      if (i + k <= nx - 1)
        trip.emplace_back(r, static_cast<int>(grid.idx(i + k, j)), -ap);
    }
  }
  DiscreteOperator op;
  op.grid = grid;
  op.A.resize(grid.dim(), grid.dim());
  op.A.setFromTriplets(trip.begin(), trip.end());
  op.A.makeCompressed();
  return op;
}

std::vector<double> discrete_mode(const GridSpec& grid, bool x_direction) {
  const int nx = grid.nx();
  const SeqField f = kernel_field(x_direction ? Direction::x : Direction::y);
  std::vector<double> v(static_cast<std::size_t>(grid.dim()), 0.0);
  double nrm = 0.0;
  for (int i = 1; i < nx - 1; ++i)
    for (int j = 1; j < nx - 1; ++j) {
      const double val = f(0, grid.x_at(i), grid.x_at(j)).real();
      v[grid.idx(i, j)] = val;
      nrm += val * val;
    }
  nrm = std::sqrt(nrm);
  for (auto& val : v) val /= nrm;
  return v;
}

double mode_interior_residual(const DiscreteOperator& op, bool x_direction) {
  const std::vector<double> mode = discrete_mode(op.grid, x_direction);
  Eigen::Map<const Eigen::VectorXd> v(mode.data(),
                                      static_cast<long>(mode.size()));
  Eigen::VectorXd r = op.A * v;
  const int nx = op.grid.nx();
  double worst = 0.0;
  for (int i = 1; i < nx - 1; ++i)
    for (int j = 1; j < nx - 1; ++j)
      worst = std::max(worst, std::abs(r[op.grid.idx(i, j)]));
  return worst;
}

std::vector<double> principal_angles_vs_modes(const GridSpec& grid,
                                              const std::vector<double>& v1,
                                              const std::vector<double>& v2) {
  const long N = grid.dim();
  Eigen::MatrixXd M(N, 2), K(N, 2);
  {
    const std::vector<double> m1 = discrete_mode(grid, true);
    const std::vector<double> m2 = discrete_mode(grid, false);
    for (long r = 0; r < N; ++r) {
      M(r, 0) = m1[r];
      M(r, 1) = m2[r];
      K(r, 0) = v1[r];
      K(r, 1) = v2[r];
    }
  }
  const Eigen::MatrixXd q1 = Eigen::HouseholderQR<Eigen::MatrixXd>(M)
                                 .householderQ()
                                 .setLength(2) *
                             Eigen::MatrixXd::Identity(N, 2);
  const Eigen::MatrixXd q2 = Eigen::HouseholderQR<Eigen::MatrixXd>(K)
                                 .householderQ()
                                 .setLength(2) *
                             Eigen::MatrixXd::Identity(N, 2);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(q1.transpose() * q2);
  std::vector<double> ang;
  for (int i = 0; i < 2; ++i) {
    const double s = std::clamp(svd.singularValues()[i], 0.0, 1.0);
    ang.push_back(std::acos(s));
  }
  return ang;
}

KernelReport near_kernel(const DiscreteOperator& op, int count, double tol,
                         std::uint64_t seed) {
  const auto t_start = std::chrono::steady_clock::now();
  const long N = op.A.rows();
  const int p = count + 2;  // guard vectors for the subspace iteration

  Eigen::SparseMatrix<double> A = op.A;  // column-major copy for the solver
  Eigen::SparseMatrix<double> B = (A.transpose() * A).pruned();
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(B);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  Eigen::MatrixXd V(N, p);
  for (long i = 0; i < N; ++i)
    for (int j = 0; j < p; ++j) V(i, j) = dist(rng);

  Eigen::VectorXd ritz = Eigen::VectorXd::Zero(p);
  Eigen::MatrixXd X;
  int it = 0;
  for (; it < 400; ++it) {
    // one inverse power step on B = A^T A, then Rayleigh-Ritz
    Eigen::MatrixXd Y = ldlt.solve(V);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(Y);
    Eigen::MatrixXd Q =
        qr.householderQ().setLength(p) * Eigen::MatrixXd::Identity(N, p);
    Eigen::MatrixXd AQ = A * Q;
    Eigen::MatrixXd H = AQ.transpose() * AQ;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    X = Q * es.eigenvectors();
    Eigen::VectorXd newritz = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const double drift = (newritz.head(count) - ritz.head(count)).norm();
    ritz = newritz;
    V = X;
    if (it > 3 && drift < tol * std::max(ritz[count - 1], 1e-30)) break;
  }

  KernelReport rep;
  rep.grid = op.grid;
  rep.seed = seed;
  rep.iterations = it + 1;
  for (int i = 0; i < count; ++i) {
    rep.singular_values.push_back(ritz[i]);
    std::vector<double> vec(static_cast<std::size_t>(N));
    for (long r = 0; r < N; ++r) vec[r] = X(r, i);
    rep.kernel_vectors.push_back(std::move(vec));
  }
  if (count >= 3 && ritz[1] > 0.0) rep.gap_ratio = ritz[2] / ritz[1];

  const std::vector<double> m1 = discrete_mode(op.grid, true);
  const std::vector<double> m2 = discrete_mode(op.grid, false);
  for (int i = 0; i < std::min(count, 2); ++i) {
    double c1 = 0.0, c2 = 0.0;
    for (long r = 0; r < N; ++r) {
      c1 += rep.kernel_vectors[i][r] * m1[r];
      c2 += rep.kernel_vectors[i][r] * m2[r];
    }
    rep.correlations.push_back(std::abs(c1));
    rep.correlations.push_back(std::abs(c2));
  }
  if (count >= 2)
    rep.principal_angles = principal_angles_vs_modes(
        op.grid, rep.kernel_vectors[0], rep.kernel_vectors[1]);

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return rep;
}

std::vector<ConvergenceRow> convergence_study(const std::vector<GridSpec>& grids,
                                              std::uint64_t seed) {
  std::vector<ConvergenceRow> rows;
  for (const GridSpec& g : grids) {
    const DiscreteOperator op = assemble(g);
    const KernelReport rep = near_kernel(op, 4, 1e-10, seed);
    rows.push_back({g.h(), g.L(), rep.singular_values, rep.principal_angles});
  }
  return rows;
}

double theta_small(double /*h*/, double L) {
  // Calibrated against the convergence study: the smallest pair scales with
  // the domain as 1/L^2 and is insensitive to h at these resolutions.
  return 1.35 / (L * L);
}

}  // namespace toda
