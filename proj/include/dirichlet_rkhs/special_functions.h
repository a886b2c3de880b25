#pragma once

#include "dirichlet_rkhs/types.h"

namespace dirichlet_rkhs {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;

/// Gamma function for x > 0. Throws DomainError otherwise.
double eval_gamma(double x);

/// Upper incomplete gamma Gamma(a, z) = int_z^inf t^{a-1} e^{-t} dt for real
/// `a` and Re(z) > 0, principal branch of z^a. Uses the lower-gamma power
/// series when |z| < a + 1 and Legendre's continued fraction otherwise.
Complex eval_upper_gamma(double a, Complex z, long max_terms = 100000);

/// Gamma(a, z) * e^z * z^{-a}, the continued-fraction part alone. Finite for
/// |z| large where Gamma(a, z) itself under- or overflows.
Complex upper_gamma_cf_scaled(double a, Complex z, long max_terms = 100000);

/// Lower incomplete gamma scaled as gamma(a, z) * e^z * z^{-a}
///   = sum_k z^k / (a (a+1) ... (a+k)), a not a non-positive integer.
Complex lower_gamma_series_scaled(double a, Complex z, long max_terms = 100000);

/// (e^z - 1) computed without cancellation for small |z|.
Complex expm1(Complex z);

/// (e^z - 1) / z, equal to 1 at z = 0.
Complex exprel(Complex z);

}  // namespace dirichlet_rkhs
