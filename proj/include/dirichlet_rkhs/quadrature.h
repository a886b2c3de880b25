#pragma once

#include <functional>

#include "dirichlet_rkhs/types.h"

namespace dirichlet_rkhs {

struct QuadratureResult {
  Complex value;
  double error;  // estimated absolute error
};

/// Globally adaptive 7-15 point Gauss-Kronrod quadrature on [a, b]: the
/// interval with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol |I|). ConvergenceError when
/// max_intervals is exhausted first.
QuadratureResult integrate(const std::function<Complex(double)>& f, double a, double b, double abs_tol,
                           double rel_tol, int max_intervals = 4000);

}  // namespace dirichlet_rkhs
