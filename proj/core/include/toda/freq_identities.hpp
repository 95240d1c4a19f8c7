#pragma once
#include "toda/symbols.hpp"

namespace toda {

// Smooth bump supported on [a, b], exp(-1/(1-z^2)) in the rescaled variable.
struct Bump {
  double a = 0.5;
  double b = 1.5;
  cplx operator()(double s) const;
};

// Frequency-side identity for the transform of (F1 phi)_n: assembles the
// left side from the closed-form ratio transforms (five convolution
// integrals) and the right side from
//   2 pi i e^{2 pi i (alpha + beta i) xi} (P h' + Q h - R g) / (1 - gamma E),
// h and g the cumulative integrals of the bump data.  Returns the max
// relative mismatch over a fixed xi sample.
double verify_family1_transform(int n, double y, const Bump& phi_hat);

// Same for the transform of (F0 sigma)_n, both signs of y:
//   y > 0:  e^{2 pi i (alpha0 + beta0 i) xi}/(E-1) (P0 h1' + Q0 h1)
//   y < 0: -e^{2 pi i (alpha0 - beta0 i) xi}/(E-1) (P0 h2' + Q0 h2)
double verify_family0_transform(int n, double y, const Bump& sigma_hat);

}  // namespace toda
