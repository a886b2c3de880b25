#pragma once

#include "dirichlet_rkhs/types.h"

namespace dirichlet_rkhs {

/// Accuracy controls shared by the zeta-type evaluators. Immutable; the
/// constructor enforces tol > 0, max_terms >= 16 and em_order in [1, 12].
class EvalConfig {
 public:
  EvalConfig() : EvalConfig(1e-10, 1000000, 8) {}
  EvalConfig(double tol, long max_terms, int em_order);

  double tol() const { return tol_; }
  long max_terms() const { return max_terms_; }
  int em_order() const { return em_order_; }

 private:
  double tol_;
  long max_terms_;
  int em_order_;
};

/// Weight exponent of Z_alpha(s) = sum_n n^{-s} log^{-alpha}(n+1), alpha <= 1.
class WeightedZetaParams {
 public:
  explicit WeightedZetaParams(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

/// Riemann zeta by Euler-Maclaurin summation, valid for Re(s) > 0, s != 1.
/// The truncation point is chosen from the remainder bound so that the
/// absolute error stays below cfg.tol().
Complex eval_zeta(Complex s, const EvalConfig& cfg = {});

/// h(z) = zeta(z) - 1/(z-1), the entire part of zeta, for Re(z) > 0.
/// The pole is cancelled inside the tail term, so z = 1 is an ordinary point.
Complex eval_zeta_remainder(Complex z, const EvalConfig& cfg = {});

/// Weighted zeta Z_alpha(s) for Re(s) > 1.
Complex eval_weighted_zeta(const WeightedZetaParams& p, Complex s, const EvalConfig& cfg = {});

/// Z_alpha(z) - Gamma(1-alpha) (z-1)^{alpha-1} for alpha < 1, and
/// Z_1(z) - log(1/(z-1)) for alpha = 1. Principal branches; Re(z) > 1.
Complex eval_weighted_remainder(const WeightedZetaParams& p, Complex z, const EvalConfig& cfg = {});

/// Singular part subtracted by eval_weighted_remainder.
Complex weighted_singular_part(const WeightedZetaParams& p, Complex z);

/// Truncation length the zeta evaluator would use at s; exposed for callers
/// that size search grids by the dominant frequency log N.
long zeta_truncation_length(Complex s, const EvalConfig& cfg = {});

}  // namespace dirichlet_rkhs
