#pragma once
#include <functional>
#include <vector>

#include "toda/constants.hpp"

namespace toda {

// Frequency-side constants for given (n, y).
struct SymbolParams {
  int n = 0;
  double y = 0.0;
  double lam = lambda;
  double alpha = 0.0;    // n/(2 sqrt2)
  double beta = 0.0;     // sqrt(y^2/2 + 1/32) >= 1/(4 sqrt2)
  double b = 0.0;        // -y/2
  double c = delta;      // 1/(2 sqrt2)
  double alpha1 = 0.0;   // alpha - c
  double alpha0 = 0.0;   // (n + (sqrt2-1)/2) / (2 sqrt2)
  double beta0 = 0.0;    // |y| / sqrt2
  cplx A1{}, A2{}, A3{}, A4{};
  cplx gamma{}, gamma_star{};  // gamma*gamma_star = lambda^-2, |gamma| < 1

  static SymbolParams make(int n, double y);
};

struct FreqFunction {
  std::function<cplx(double)> eval;
  std::vector<double> singular_set;  // sorted

  cplx operator()(double xi) const { return eval(xi); }
};

// All nine frequency symbols.  E = e^{pi i xi / sqrt2} below.
//   2 pi i P  = 2 pi i xi - 2 - E/lambda + lambda/E
//   Q         = (1-gamma E)(A1 + A2/E) - (1-gamma* E)(A3 + A4/E)
//   J         = ((1-gamma* E)/(1-gamma E) e^{-4 pi beta xi})'
//   R         = (1-gamma E)(A3 + A4/E) e^{4 pi beta xi}
//   P1 = P,  Q1 = Q - P J'/J,  R1 = R J
//   P0        = 2 pi i xi - lambda(E-1) - (1-1/E)/lambda
//   Q0        = -(lambda pi i/sqrt2)(E-1) + (pi i/(lambda sqrt2))(1-1/E)
struct Symbols {
  SymbolParams par;
  FreqFunction P, Q, J, R, P1, Q1, R1, P0, Q0;
  // J' and the removable-at-0 combination P J'/J, needed by the ODE side.
  std::function<cplx(double)> Jprime;
  // Same evaluators extended to complex argument (series extraction near 0).
  std::function<cplx(cplx)> Pc, Q1c, R1c, P0c, Q0c;
};

Symbols symbols(int n, double y);

// Zeros of J on (0, xi_max], located by Gauss-Newton on the periodic bracket
// factor of J; they sit on the lattice 2 sqrt2 * j.
std::vector<double> j_zeros(const SymbolParams& par, double xi_max);

}  // namespace toda
