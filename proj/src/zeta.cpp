#include "dirichlet_rkhs/zeta.h"

#include <array>
#include <cmath>
#include <string>

#include "dirichlet_rkhs/errors.h"
#include "dirichlet_rkhs/special_functions.h"

namespace dirichlet_rkhs {

namespace {

constexpr double kPoleGuard = 1e-14;

// B_2, B_4, ..., B_26
constexpr std::array<double, 13> kBernoulli = {
    1.0 / 6.0,          -1.0 / 30.0,        1.0 / 42.0,         -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0,    7.0 / 6.0,          -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0,  854513.0 / 138.0,   -236364091.0 / 2730.0,
    8553103.0 / 6.0};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// n^{-s} for integer n >= 1.
Complex npow(double log_n, Complex s) {
  return std::polar(std::exp(-s.real() * log_n), -s.imag() * log_n);
}

// Rising factorial modulus |s (s+1) ... (s+m-1)|.
double rising_abs(Complex s, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= std::abs(s + static_cast<double>(i));
  return r;
}

// Smallest N with the Euler-Maclaurin remainder bound
//   |R| <= |s+2K+1| / (sigma+2K+1) * |B_{2K+2}| / (2K+2)! * |(s)_{2K+1}| N^{-sigma-2K-1}
// below `target`.
long truncation_for(Complex s, int order, double target, long max_terms) {
  const int k = order;
  const double sigma = s.real();
  const double expo = sigma + 2.0 * k + 1.0;
  const double log_c = std::log(std::abs(s + 2.0 * k + 1.0) / expo) +
                       std::log(std::abs(kBernoulli[k]) / factorial(2 * k + 2)) +
                       std::log(rising_abs(s, 2 * k + 1));
  const double log_n = (log_c - std::log(target)) / expo;
  if (log_n > std::log(static_cast<double>(max_terms))) {
    throw ConvergenceError("Euler-Maclaurin truncation exceeds max_terms at s = (" +
                           std::to_string(s.real()) + ", " + std::to_string(s.imag()) + ")");
  }
  const long n = static_cast<long>(std::ceil(std::exp(log_n)));
  return std::max<long>(n, 2);
}

// Pieces of the Euler-Maclaurin formula for zeta that do not involve the
// N^{1-s}/(s-1) integral term.
struct ZetaParts {
  Complex head;  // sum_{n<N} n^{-s} + N^{-s}/2 + Bernoulli corrections
  long n;
};

ZetaParts zeta_parts(Complex s, const EvalConfig& cfg) {
  const long n_trunc = truncation_for(s, cfg.em_order(), 0.5 * cfg.tol(), cfg.max_terms());
  Complex head = 0.0;
  for (long n = 1; n < n_trunc; ++n) {
    head += npow(std::log(static_cast<double>(n)), s);
  }
  const double log_n = std::log(static_cast<double>(n_trunc));
  const Complex n_pow = npow(log_n, s);
  head += 0.5 * n_pow;
  // B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
  Complex rising = s;
  Complex power = n_pow / static_cast<double>(n_trunc);
  const double inv_n2 = 1.0 / (static_cast<double>(n_trunc) * static_cast<double>(n_trunc));
  for (int k = 1; k <= cfg.em_order(); ++k) {
    head += kBernoulli[k - 1] / factorial(2 * k) * rising * power;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    power *= inv_n2;
  }
  return {head, n_trunc};
}

void require_right_of(Complex s, double edge, const char* who) {
  if (!(s.real() > edge)) {
    throw DomainError(std::string(who) + ": requires Re(s) > " + std::to_string(edge) +
                      ", got Re(s) = " + std::to_string(s.real()));
  }
}

// Taylor coefficients g_0..g_m of g(N + h) = (N+h)^{-s} log^{-alpha}(N+1+h).
ComplexVector weighted_term_taylor(double alpha, Complex s, long n_trunc, int m) {
  const double n = static_cast<double>(n_trunc);
  const double n1 = n + 1.0;
  std::vector<double> u(m + 1);
  u[0] = std::log(n1);
  double inv_pow = 1.0;
  for (int j = 1; j <= m; ++j) {
    inv_pow /= n1;
    u[j] = ((j % 2 == 1) ? 1.0 : -1.0) * inv_pow / j;
  }
  // w = u^p, n u_0 w_n = sum_{k=1}^n ((p+1)k - n) u_k w_{n-k}
  const double p = -alpha;
  std::vector<double> w(m + 1);
  w[0] = std::pow(u[0], p);
  for (int j = 1; j <= m; ++j) {
    double acc = 0.0;
    for (int k = 1; k <= j; ++k) acc += ((p + 1.0) * k - j) * u[k] * w[j - k];
    w[j] = acc / (j * u[0]);
  }
  ComplexVector a(m + 1);
  a[0] = npow(std::log(n), s);
  for (int j = 1; j <= m; ++j) a[j] = a[j - 1] * (-s - static_cast<double>(j - 1)) / (j * n);
  ComplexVector g(m + 1, 0.0);
  for (int j = 0; j <= m; ++j) {
    for (int k = 0; k <= j; ++k) g[j] += a[k] * w[j - k];
  }
  return g;
}

struct SplitValue {
  Complex regular;
  Complex singular;
};

// Z_alpha(s) split as regular + singular, singular being Gamma(1-alpha)(s-1)^{alpha-1}
// (alpha < 1) or -log(s-1) (alpha = 1).
//
// Tail from N: Euler-Maclaurin with the integral
//   int_N^inf x^{-s} log^{-alpha}(x+1) dx
//     = sum_k (s)_k/k! int_X^inf y^{-s-k} log^{-alpha} y dy,      X = N+1
//     = sum_k (s)_k/k! (s+k-1)^{alpha-1} Gamma(1-alpha, (s+k-1) log X).
SplitValue weighted_zeta_split(double alpha, Complex s, const EvalConfig& cfg) {
  const int order = cfg.em_order();
  const double a = 1.0 - alpha;
  long n_trunc = truncation_for(s, order, 0.1 * cfg.tol(), cfg.max_terms());
  n_trunc = std::max<long>(n_trunc, static_cast<long>(std::ceil(std::abs(s))) + 16);
  ComplexVector taylor;
  for (;;) {
    if (n_trunc > cfg.max_terms()) {
      throw ConvergenceError("weighted zeta: truncation exceeds max_terms");
    }
    taylor = weighted_term_taylor(alpha, s, n_trunc, 2 * order + 1);
    const double next = std::abs(kBernoulli[order] / (2.0 * order + 2.0) * taylor[2 * order + 1]);
    if (next <= 0.1 * cfg.tol()) break;
    n_trunc *= 2;
  }

  Complex head = 0.0;
  for (long n = 1; n < n_trunc; ++n) {
    const double ln = std::log(static_cast<double>(n));
    head += npow(ln, s) * std::pow(std::log1p(static_cast<double>(n)), -alpha);
  }
  head += 0.5 * taylor[0];
  for (int k = 1; k <= order; ++k) {
    head -= kBernoulli[k - 1] / (2.0 * k) * taylor[2 * k - 1];
  }

  const double big_x = static_cast<double>(n_trunc) + 1.0;
  const double log_x = std::log(big_x);
  const double log_x_pow_a = std::pow(log_x, a);

  // k >= 1 terms: (s)_k/k! L^a X^{-(s+k-1)} * CF(a, (s+k-1) L)
  Complex coeff = 1.0;
  Complex tail = 0.0;
  for (int k = 1;; ++k) {
    if (k > 400) throw ConvergenceError("weighted zeta: binomial tail series did not converge");
    coeff *= (s + static_cast<double>(k - 1)) / static_cast<double>(k);
    const Complex c = s + static_cast<double>(k - 1);
    const Complex term = coeff * log_x_pow_a * npow(log_x, c) *
                         upper_gamma_cf_scaled(a, c * log_x, cfg.max_terms());
    tail += term;
    if (std::abs(term) <= 1e-17 * (std::abs(head) + std::abs(tail)) + 1e-3 * cfg.tol() * 1e-3) {
      break;
    }
  }

  // k = 0 term, c = s - 1.
  const Complex c0 = s - 1.0;
  const Complex z0 = c0 * log_x;
  SplitValue out{head + tail, weighted_singular_part(WeightedZetaParams(alpha), s)};
  const double series_radius = std::max(1.0, a + 1.0);
  if (std::abs(z0) < series_radius) {
    if (a == 0.0) {
      // E1(z0) + log(c0) = -gamma - log L - sum_{j>=1} (-z0)^j / (j j!)
      Complex term = 1.0;
      Complex sum = 0.0;
      for (int j = 1; j < 400; ++j) {
        term *= -z0 / static_cast<double>(j);
        const Complex contrib = term / static_cast<double>(j);
        sum += contrib;
        if (std::abs(contrib) <= 1e-17 * (std::abs(sum) + 1.0)) break;
      }
      out.regular += -kEulerGamma - std::log(log_x) - sum;
    } else {
      // -c0^{alpha-1} gamma(a, z0) = -L^a e^{-z0} sum_j z0^j / (a)_{j+1}
      out.regular -= log_x_pow_a * std::exp(-z0) * lower_gamma_series_scaled(a, z0, cfg.max_terms());
    }
  } else {
    const Complex full0 = log_x_pow_a * std::exp(-z0) * upper_gamma_cf_scaled(a, z0, cfg.max_terms());
    out.regular += full0 - out.singular;
  }
  return out;
}

}  // namespace

EvalConfig::EvalConfig(double tol, long max_terms, int em_order)
    : tol_(tol), max_terms_(max_terms), em_order_(em_order) {
  if (!(tol > 0.0)) throw DomainError("EvalConfig: tol must be positive");
  if (max_terms < 16) throw DomainError("EvalConfig: max_terms must be at least 16");
  if (em_order < 1 || em_order > 12) throw DomainError("EvalConfig: em_order must lie in [1, 12]");
}

WeightedZetaParams::WeightedZetaParams(double alpha) : alpha_(alpha) {
  if (!(alpha <= 1.0)) throw DomainError("WeightedZetaParams: alpha must be <= 1");
}

long zeta_truncation_length(Complex s, const EvalConfig& cfg) {
  return truncation_for(s, cfg.em_order(), 0.5 * cfg.tol(), cfg.max_terms());
}

Complex eval_zeta(Complex s, const EvalConfig& cfg) {
  require_right_of(s, 0.0, "eval_zeta");
  if (std::abs(s - 1.0) < kPoleGuard) throw PoleError("eval_zeta: s is within 1e-14 of the pole");
  const ZetaParts parts = zeta_parts(s, cfg);
  const double log_n = std::log(static_cast<double>(parts.n));
  return parts.head + npow(log_n, s - 1.0) / (s - 1.0);
}

Complex eval_zeta_remainder(Complex z, const EvalConfig& cfg) {
  require_right_of(z, 0.0, "eval_zeta_remainder");
  const ZetaParts parts = zeta_parts(z, cfg);
  const double log_n = std::log(static_cast<double>(parts.n));
  // (N^{1-z} - 1)/(z - 1) = -log N * exprel(-(z-1) log N)
  return parts.head - log_n * exprel(-(z - 1.0) * log_n);
}

Complex weighted_singular_part(const WeightedZetaParams& p, Complex z) {
  const Complex c = z - 1.0;
  if (p.alpha() == 1.0) return -std::log(c);
  return eval_gamma(1.0 - p.alpha()) * std::pow(c, p.alpha() - 1.0);
}

Complex eval_weighted_zeta(const WeightedZetaParams& p, Complex s, const EvalConfig& cfg) {
  require_right_of(s, 1.0, "eval_weighted_zeta");
  if (std::abs(s - 1.0) < kPoleGuard) throw PoleError("eval_weighted_zeta: s is within 1e-14 of 1");
  const SplitValue v = weighted_zeta_split(p.alpha(), s, cfg);
  return v.regular + v.singular;
}

Complex eval_weighted_remainder(const WeightedZetaParams& p, Complex z, const EvalConfig& cfg) {
  require_right_of(z, 1.0, "eval_weighted_remainder");
  return weighted_zeta_split(p.alpha(), z, cfg).regular;
}

}  // namespace dirichlet_rkhs
