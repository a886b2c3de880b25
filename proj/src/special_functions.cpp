#include "dirichlet_rkhs/special_functions.h"

#include <cmath>
#include <limits>
#include <string>

#include "dirichlet_rkhs/errors.h"

namespace dirichlet_rkhs {

namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

}  // namespace

double eval_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("eval_gamma: argument must be positive, got " + std::to_string(x));
  }
  return std::tgamma(x);
}

Complex expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  if (std::abs(z) > 0.5) return std::exp(z) - 1.0;
  const double s = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

Complex exprel(Complex z) {
  if (std::abs(z) < 1e-5) {
    return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0)));
  }
  return expm1(z) / z;
}

Complex lower_gamma_series_scaled(double a, Complex z, long max_terms) {
  if (a <= 0.0 && a == std::floor(a)) {
    throw DomainError("lower_gamma_series_scaled: a must not be a non-positive integer");
  }
  Complex term = 1.0 / a;
  Complex sum = term;
  for (long k = 1; k <= max_terms; ++k) {
    term *= z / (a + static_cast<double>(k));
    sum += term;
    if (std::abs(term) <= kEps * std::abs(sum)) return sum;
  }
  throw ConvergenceError("lower incomplete gamma series did not converge");
}

Complex upper_gamma_cf_scaled(double a, Complex z, long max_terms) {
  // Modified Lentz evaluation of
  //   1 / (z + 1 - a - 1(1-a) / (z + 3 - a - 2(2-a) / (z + 5 - a - ...)))
  Complex b = z + 1.0 - a;
  Complex c = 1.0 / kTiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (long i = 1; i <= max_terms; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const Complex del = d * c;
    h *= del;
    if (std::abs(del - 1.0) <= kEps) return h;
  }
  throw ConvergenceError("upper incomplete gamma continued fraction did not converge");
}

Complex eval_upper_gamma(double a, Complex z, long max_terms) {
  if (!(z.real() > 0.0)) {
    throw DomainError("eval_upper_gamma: requires Re(z) > 0");
  }
  const Complex log_z = std::log(z);
  if (a == 0.0 && std::abs(z) < 1.0) {
    // E1(z) = -gamma - log z - sum_{k>=1} (-z)^k / (k k!)
    Complex term = 1.0;
    Complex sum = 0.0;
    for (long k = 1; k <= max_terms; ++k) {
      term *= -z / static_cast<double>(k);
      const Complex contrib = term / static_cast<double>(k);
      sum += contrib;
      if (std::abs(contrib) <= kEps * std::abs(sum)) {
        return -kEulerGamma - log_z - sum;
      }
    }
    throw ConvergenceError("E1 series did not converge");
  }
  if (std::abs(z) < a + 1.0) {
    // a > -1, a != 0 here: Gamma(a) - gamma(a, z).
    const Complex lower = std::exp(a * log_z - z) * lower_gamma_series_scaled(a, z, max_terms);
    return std::tgamma(a) - lower;
  }
  return std::exp(a * log_z - z) * upper_gamma_cf_scaled(a, z, max_terms);
}

}  // namespace dirichlet_rkhs
