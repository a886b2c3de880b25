#pragma once

#include "dirichlet_rkhs/spaces.h"
#include "dirichlet_rkhs/zeta.h"

namespace dirichlet_rkhs {

/// Reproducing kernel k_w(s) of `space`:
///   H          zeta(s + conj(w))
///   H_alpha    Z_alpha(s + conj(w))
///   H^2        1 / (s + conj(w) - 1)
///   D_alpha    c_alpha (conj(w) + s - 1)^{alpha-1},  alpha < 1
///   D_1        log(1/(1-x)) / x,  x = (2s-3)(2conj(w)-3) / ((2s+1)(2conj(w)+1))
/// with c_alpha = (-alpha) 2^{-alpha-1} for alpha < 0 and 2^{alpha-1}/(1-alpha)
/// for 0 < alpha < 1.
Complex kernel_value(const SpaceId& space, const HalfPlanePoint& w, const HalfPlanePoint& s,
                     const EvalConfig& cfg = {});

/// sqrt(k_w(w)). Throws NumericalError if the diagonal value is not
/// (numerically) real and positive.
double kernel_norm(const SpaceId& space, const HalfPlanePoint& w, const EvalConfig& cfg = {});

/// rho(s, w) = |s - w| / |s + conj(w) - 1|, in [0, 1).
double pseudohyperbolic_distance(const HalfPlanePoint& s, const HalfPlanePoint& w);

/// Constant c_alpha of the D_alpha kernel, alpha < 1, alpha != 0.
double bergman_dirichlet_constant(double alpha);

}  // namespace dirichlet_rkhs
