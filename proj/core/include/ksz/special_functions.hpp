#pragma once

namespace ksz {

inline constexpr double kEulerGamma = 0.5772156649015328606;

/// log Gamma(x) for x > 0 (Lanczos approximation), absolute error well
/// below 1e-10 on (0, 200].
double log_gamma(double x);

/// Digamma psi(x) for x > 0 (recurrence shift plus asymptotic series).
double digamma(double x);

}  // namespace ksz
