#pragma once
#include <complex>
#include <numbers>

namespace toda {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt2 = std::numbers::sqrt2;

// Spectral parameter of the Backlund chain; fixed for the whole library.
inline constexpr double lambda = sqrt2 + 1.0;
inline constexpr double lambda_inv = sqrt2 - 1.0;  // 1/(sqrt2+1), exact

// Traveling shift: F_{n+1}(x,y) = F_n(x + delta, y).
// Kept as the exact expression 1/(2*sqrt2), never a decimal literal.
inline constexpr double delta = 1.0 / (2.0 * sqrt2);

inline constexpr cplx iu{0.0, 1.0};

}  // namespace toda
