#include "toda/gridft.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>

#include "toda/lump.hpp"

namespace toda {

namespace {

struct FFT2 {
  int m;
  fftw_complex* buf;
  fftw_plan fwd, bwd;

  explicit FFT2(int m_) : m(m_) {
    buf = fftw_alloc_complex(static_cast<std::size_t>(m) * m);
    fwd = fftw_plan_dft_2d(m, m, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_2d(m, m, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~FFT2() {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buf);
  }
  FFT2(const FFT2&) = delete;
  FFT2& operator=(const FFT2&) = delete;

  void load(const std::vector<cplx>& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      buf[i][0] = a[i].real();
      buf[i][1] = a[i].imag();
    }
  }
  void store(std::vector<cplx>& a) const {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = {buf[i][0], buf[i][1]};
  }
  void forward(std::vector<cplx>& a) {
    load(a);
    fftw_execute(fwd);
    store(a);
  }
  void backward(std::vector<cplx>& a) {  // normalized inverse
    load(a);
    fftw_execute(bwd);
    store(a);
    const double s = 1.0 / (static_cast<double>(m) * m);
    for (auto& v : a) v *= s;
  }
};

double fftfreq(int i, int m, double h) {
  return (i < m - i ? i : i - m) / (h * m);
}

}  // namespace

double multiplier_symbol(double xi1, double xi2) {
  return -pi * pi * (xi1 * xi1 + xi2 * xi2) + 2.0 - 2.0 * std::cos(pi * xi1 / sqrt2);
}

MultiplierResult multiplier_solve_eta_tilde(
    const std::function<double(int, double, double)>& U, const FTGrid& grid,
    double mean_tol, bool check_mean) {
  const int m = grid.m;
  const double h = grid.h();
  const std::size_t N = static_cast<std::size_t>(m) * m;
  auto x_at = [&](int i) { return -grid.L + h * i; };

  MultiplierResult out;
  out.grid = grid;

  std::vector<double> v(N), am(N), f(N);
  for (int i = 0; i < m; ++i) {
    const double x = x_at(i);
    for (int j = 0; j < m; ++j) {
      const double y = x_at(j);
      const std::size_t r = static_cast<std::size_t>(i) * m + j;
      v[r] = U(-1, x, y) - U(0, x, y);
      am[r] = hop_coeff_minus(0, x, y);
      f[r] = (am[r] - 1.0) * v[r];
      out.mean_f += f[r];
      out.mean_v += v[r];
    }
  }
  out.mean_f *= h * h;
  out.mean_v *= h * h;
  out.mean_zero_ok = std::abs(out.mean_f) < mean_tol;
  if (check_mean && !out.mean_zero_ok)
    throw MultiplierError("mean of f is not zero: input is not an admissible kernel candidate");

  FFT2 fft(m);
  std::vector<cplx> work(N);
  for (std::size_t r = 0; r < N; ++r) work[r] = f[r];
  fft.forward(work);

  std::vector<cplx> eta_hat(N);
  for (int i = 0; i < m; ++i) {
    const double xi1 = fftfreq(i, m, h);
    for (int j = 0; j < m; ++j) {
      const double xi2 = fftfreq(j, m, h);
      const std::size_t r = static_cast<std::size_t>(i) * m + j;
      const double sym = multiplier_symbol(xi1, xi2);
      eta_hat[r] = (i == 0 && j == 0) ? cplx(0.0) : work[r] / sym;
    }
  }

  work = eta_hat;
  fft.backward(work);
  out.eta.resize(N);
  for (std::size_t r = 0; r < N; ++r) {
    out.eta[r] = work[r].real();
    out.eta_imag_max = std::max(out.eta_imag_max, std::abs(work[r].imag()));
  }

  // Identity check in space: the quarter-Laplacian of eta-tilde against
  // e^{Q_{-1}-Q_0} v, away from the periodization boundary.
  std::vector<cplx> lap(N);
  for (int i = 0; i < m; ++i) {
    const double xi1 = fftfreq(i, m, h);
    for (int j = 0; j < m; ++j) {
      const double xi2 = fftfreq(j, m, h);
      const std::size_t r = static_cast<std::size_t>(i) * m + j;
      lap[r] = eta_hat[r] * (-pi * pi * (xi1 * xi1 + xi2 * xi2));
    }
  }
  fft.backward(lap);
  const int skip = static_cast<int>(std::ceil(out.interior_margin / h));
  for (int i = skip; i < m - skip; ++i)
    for (int j = skip; j < m - skip; ++j) {
      const std::size_t r = static_cast<std::size_t>(i) * m + j;
      out.yi_interior_max =
          std::max(out.yi_interior_max, std::abs(lap[r].real() - am[r] * v[r]));
    }

  // Bilinear-side sanity: eta = theta * eta-tilde should nearly annihilate
  // the linearized bilinear operator at theta.  Shifts and derivatives of
  // eta-tilde are spectral (exact on the band-limited interpolant).
  {
    std::vector<cplx> et(N), es(N), etd(N), est(N), ep(N), emn(N);
    for (std::size_t r = 0; r < N; ++r) et[r] = out.eta[r];
    std::vector<cplx> ehat = et;
    fft.forward(ehat);
    auto field_from = [&](const std::function<cplx(double, double)>& mul,
                          std::vector<cplx>& dst) {
      dst = ehat;
      for (int i = 0; i < m; ++i) {
        const double xi1 = fftfreq(i, m, h);
        for (int j = 0; j < m; ++j) {
          const double xi2 = fftfreq(j, m, h);
          dst[static_cast<std::size_t>(i) * m + j] *= mul(xi1, xi2);
        }
      }
      fft.backward(dst);
    };
    // d_s = (d_x - i d_y)/2 -> pi i (xi1 - i xi2); d_t -> pi i (xi1 + i xi2)
    field_from([](double x1, double x2) { return pi * iu * cplx(x1, -x2); }, es);
    field_from([](double x1, double x2) { return pi * iu * cplx(x1, x2); }, etd);
    field_from([](double x1, double x2) {
      return pi * iu * cplx(x1, -x2) * pi * iu * cplx(x1, x2);
    }, est);
    field_from([](double x1, double) {
      return std::exp(2.0 * pi * iu * delta * x1);
    }, ep);
    field_from([](double x1, double) {
      return std::exp(-2.0 * pi * iu * delta * x1);
    }, emn);

    double worst = 0.0, scale = 0.0;
    for (int i = skip; i < m - skip; ++i) {
      const double x = x_at(i);
      for (int j = skip; j < m - skip; ++j) {
        const double y = x_at(j);
        const std::size_t r = static_cast<std::size_t>(i) * m + j;
        const TauJet th = eval_tau(Family::Theta, {0, x, y});
        const double thp = theta_val(1, x, y), thm = theta_val(-1, x, y);
        // product rule for eta = theta * eta-tilde
        const cplx e = et[r];
        const cplx e_s = th.d_s * e + th.value * es[r];
        const cplx e_t = th.d_t * e + th.value * etd[r];
        const cplx e_st = th.d_st * e + th.d_s * etd[r] + th.d_t * es[r] +
                          th.value * est[r];
        const cplx e_p = thp * ep[r];   // (theta eta~)_{n+1} at n = 0
        const cplx e_m = thm * emn[r];
        const cplx ev = th.value * e;
        const cplx T = e_st * th.value - e_s * th.d_t - e_t * th.d_s +
                       ev * th.d_st -
                       (e_p * thm + thp * e_m - 2.0 * th.value * ev);
        const double sc = std::abs(e_st * th.value) + std::abs(e_s * th.d_t) +
                          std::abs(e_t * th.d_s) + std::abs(ev * th.d_st) +
                          std::abs(e_p * thm) + std::abs(thp * e_m) +
                          2.0 * std::abs(th.value * ev);
        worst = std::max(worst, std::abs(T));
        scale = std::max(scale, sc);
      }
    }
    out.t_theta_rel = worst / (scale > 0.0 ? scale : 1.0);
  }
  return out;
}

}  // namespace toda
