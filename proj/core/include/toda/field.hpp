#pragma once
#include <functional>
#include <utility>

#include "toda/tau.hpp"

namespace toda {

// Value and x/y-partials up to second order of a plane function at a point.
struct Jet2 {
  cplx v{};
  cplx dx{}, dy{};
  cplx dxx{}, dyy{}, dxy{};

  cplx ds() const { return 0.5 * (dx - iu * dy); }
  cplx dt() const { return 0.5 * (dx + iu * dy); }
  cplx dss() const { return 0.25 * (dxx - dyy) - 0.5 * iu * dxy; }
  cplx dst() const { return 0.25 * (dxx + dyy); }  // = Laplacian/4
  cplx dtt() const { return 0.25 * (dxx - dyy) + 0.5 * iu * dxy; }
  cplx lap() const { return dxx + dyy; }
};

// A Z-indexed family of plane functions.  Closed-form evaluators only in this
// layer; grid-sampled fields live in gridft/spectral.  If no analytic jet is
// supplied, derivatives fall back to Richardson-extrapolated central
// differences of the value.
class SeqField {
 public:
  using Eval = std::function<cplx(int, double, double)>;
  using JetEval = std::function<Jet2(int, double, double)>;

  SeqField() = default;
  explicit SeqField(Eval eval, bool traveling = false)
      : eval_(std::move(eval)), traveling_(traveling) {}
  SeqField(Eval eval, JetEval jet, bool traveling = false)
      : eval_(std::move(eval)), jet_(std::move(jet)), traveling_(traveling) {}

  cplx operator()(int n, double x, double y) const { return eval_(n, x, y); }
  cplx operator()(const SitePoint& p) const { return eval_(p.n, p.x, p.y); }

  Jet2 jet(int n, double x, double y) const;
  Jet2 jet(const SitePoint& p) const { return jet(p.n, p.x, p.y); }

  bool traveling() const { return traveling_; }
  bool has_analytic_jet() const { return static_cast<bool>(jet_); }

  static SeqField zero();
  static SeqField constant(cplx c);

 private:
  Eval eval_;
  JetEval jet_;
  bool traveling_ = false;
};

// The tau families as SeqFields with exact jets.
SeqField tau_field(Family family);

// Finite-difference jet of a raw evaluator (Richardson, two step sizes).
Jet2 fd_jet(const SeqField::Eval& f, int n, double x, double y, double h = 1e-3);

}  // namespace toda
