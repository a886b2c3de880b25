#include "dirichlet_rkhs/kernels.h"

#include <cmath>

#include "dirichlet_rkhs/errors.h"

namespace dirichlet_rkhs {

namespace {

constexpr double kDiagonalImagTolerance = 1e-10;

// log(1/(1-x))/x = sum_n x^n/(n+1). Here 1 - x = 8(s+conj(w)-1)/((2s+1)(2conj(w)+1)),
// which is the Cayley pullback of the unit-disk Dirichlet kernel.
Complex dirichlet_space_kernel(Complex s, Complex w_bar) {
  const Complex num = (2.0 * s - 3.0) * (2.0 * w_bar - 3.0);
  const Complex den = (2.0 * s + 1.0) * (2.0 * w_bar + 1.0);
  const Complex x = num / den;
  if (std::abs(x) < 0.25) {
    Complex power = 1.0;
    Complex sum = 1.0;
    for (int n = 1; n < 60; ++n) {
      power *= x;
      const Complex term = power / static_cast<double>(n + 1);
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
  }
  const Complex one_minus_x = 8.0 * (s + w_bar - 1.0) / den;
  return -std::log(one_minus_x) / x;
}

}  // namespace

double bergman_dirichlet_constant(double alpha) {
  if (alpha < 0.0) return -alpha * std::pow(2.0, -alpha - 1.0);
  if (alpha > 0.0 && alpha < 1.0) return std::pow(2.0, alpha - 1.0) / (1.0 - alpha);
  throw DomainError("c_alpha is defined for alpha < 1, alpha != 0");
}

Complex kernel_value(const SpaceId& space, const HalfPlanePoint& w, const HalfPlanePoint& s,
                     const EvalConfig& cfg) {
  const Complex w_bar = std::conj(w.value());
  const Complex z = s.value() + w_bar;
  switch (space.family()) {
    case SpaceFamily::HardyDirichlet:
      return eval_zeta(z, cfg);
    case SpaceFamily::WeightedDirichlet:
      return eval_weighted_zeta(WeightedZetaParams(*space.alpha()), z, cfg);
    case SpaceFamily::HardyHalfPlane:
      return 1.0 / (z - 1.0);
    case SpaceFamily::BergmanDirichletHalfPlane: {
      const double alpha = *space.alpha();
      if (alpha == 1.0) return dirichlet_space_kernel(s.value(), w_bar);
      return bergman_dirichlet_constant(alpha) * std::pow(z - 1.0, alpha - 1.0);
    }
  }
  throw DomainError("unknown space family");
}

double kernel_norm(const SpaceId& space, const HalfPlanePoint& w, const EvalConfig& cfg) {
  const Complex diag = kernel_value(space, w, w, cfg);
  if (std::abs(diag.imag()) >= kDiagonalImagTolerance * std::max(1.0, std::abs(diag.real()))) {
    throw NumericalError("kernel diagonal has imaginary residue " + std::to_string(diag.imag()));
  }
  if (!(diag.real() > 0.0)) {
    throw NumericalError("kernel diagonal is not positive: " + std::to_string(diag.real()));
  }
  return std::sqrt(diag.real());
}

double pseudohyperbolic_distance(const HalfPlanePoint& s, const HalfPlanePoint& w) {
  return std::abs(s.value() - w.value()) / std::abs(s.value() + std::conj(w.value()) - 1.0);
}

}  // namespace dirichlet_rkhs
