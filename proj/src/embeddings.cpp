#include "dirichlet_rkhs/embeddings.h"

#include <cmath>
#include <limits>
#include <random>

#include "dirichlet_rkhs/errors.h"
#include "dirichlet_rkhs/quadrature.h"
#include "dirichlet_rkhs/special_functions.h"

namespace dirichlet_rkhs {

namespace {

constexpr std::size_t kLineMaxDegree = 10000;
constexpr std::size_t kStripMaxDegree = 1000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// int_theta^{theta+1} e^{i lambda t} dt = e^{i lambda (theta + 1/2)} sin(lambda/2)/(lambda/2)
Complex window_integral(double lambda, double theta) {
  const double half = 0.5 * lambda;
  const double sinc = half == 0.0 ? 1.0 : std::sin(half) / half;
  return std::polar(sinc, lambda * (theta + 0.5));
}

// sum_{m,n} a_m conj(a_n) w(m, n) I(log(n/m)) over nonzero coefficients,
// with w symmetric and real. Returns the (real) sum and the magnitude of
// its terms for a rounding estimate.
template <typename Weight>
std::pair<double, double> pair_sum(const DirichletPolynomial& f, double theta, Weight weight) {
  const ComplexVector& a = f.coeffs();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != Complex(0.0)) support.push_back(i + 1);
  }
  std::vector<double> logs(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) logs[i] = std::log(static_cast<double>(support[i]));
  double total = 0.0;
  double magnitude = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const std::size_t m = support[i];
    const double diag = weight(m, m, logs[i], logs[i]) * std::norm(a[m - 1]);
    total += diag;
    magnitude += std::abs(diag);
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      const std::size_t n = support[j];
      const double w = weight(m, n, logs[i], logs[j]);
      if (w == 0.0) continue;
      // (m,n) and (n,m) terms are complex conjugates.
      const Complex term = a[m - 1] * std::conj(a[n - 1]) * w * window_integral(logs[j] - logs[i], theta);
      total += 2.0 * term.real();
      magnitude += 2.0 * std::abs(term);
    }
  }
  return {total, magnitude};
}

void check_strip_args(const DirichletPolynomial& f, double alpha) {
  if (!(alpha <= 1.0)) throw DomainError("half-strip embedding requires alpha <= 1");
  if (alpha == 0.0) throw DomainError("half-strip embedding is undefined for alpha = 0");
  if (alpha < 0.0 && f.coeff(1) != Complex(0.0)) {
    throw DomainError("for alpha < 0 the half-strip integral diverges unless a_1 = 0");
  }
  if (f.degree() > kStripMaxDegree) throw SizeError("half-strip embedding is capped at degree 1000");
}

}  // namespace

EmbeddingResult line_embedding_ratio(const DirichletPolynomial& f, double theta) {
  if (f.degree() > kLineMaxDegree) throw SizeError("line embedding is capped at degree 10000");
  const auto [integral, magnitude] = pair_sum(f, theta, [](std::size_t m, std::size_t n, double, double) {
    return 1.0 / std::sqrt(static_cast<double>(m) * static_cast<double>(n));
  });
  const double norm2 = f.norm_squared();
  const double ratio = integral / norm2;
  return {ratio, theta, std::nullopt, 16.0 * kEps * magnitude / norm2};
}

EmbeddingResult line_embedding_ratio_quadrature(const DirichletPolynomial& f, double theta) {
  const double norm2 = f.norm_squared();
  const QuadratureResult q = integrate(
      [&](double t) { return Complex(std::norm(f(Complex(0.5, t)))); }, theta, theta + 1.0, 1e-13 * norm2, 1e-13,
      20000);
  return {q.value.real() / norm2, theta, std::nullopt, q.error / norm2};
}

EmbeddingResult halfstrip_embedding_ratio(const DirichletPolynomial& f, double theta, double alpha) {
  check_strip_args(f, alpha);
  const bool bergman = alpha < 0.0;
  // exponent b of (sigma - 1/2)^b and the derivative factor log m log n
  const double b = bergman ? -alpha - 1.0 : 1.0 - alpha;
  const double gamma_b = std::tgamma(b + 1.0);
  const auto [integral, magnitude] =
      pair_sum(f, theta, [&](std::size_t m, std::size_t n, double log_m, double log_n) {
        if (!bergman && (m == 1 || n == 1)) return 0.0;
        const double c = log_m + log_n;
        double w = gamma_b * std::pow(c, -(b + 1.0)) / std::sqrt(static_cast<double>(m) * static_cast<double>(n));
        if (!bergman) w *= log_m * log_n;
        return w;
      });
  const double norm2 = f.weighted_norm_squared(alpha);
  return {integral / norm2, theta, alpha, 16.0 * kEps * magnitude / norm2};
}

EmbeddingResult halfstrip_embedding_ratio_quadrature(const DirichletPolynomial& f, double theta, double alpha) {
  check_strip_args(f, alpha);
  const bool bergman = alpha < 0.0;
  const double b = bergman ? -alpha - 1.0 : 1.0 - alpha;
  const double u_max = 60.0 / std::log(2.0);
  // For b < 0 substitute u = v^q, q = 1/(b+1): u^b du = q dv, smooth at 0.
  const bool substitute = b < 0.0;
  const double q = 1.0 / (b + 1.0);
  const double v_max = substitute ? std::pow(u_max, b + 1.0) : u_max;
  const double norm2 = f.weighted_norm_squared(alpha);

  auto column = [&](double t) {
    const QuadratureResult inner = integrate(
        [&](double v) {
          const double u = substitute ? std::pow(v, q) : v;
          const Complex s(0.5 + u, t);
          const double value = bergman ? std::norm(f(s)) : std::norm(f.derivative(s));
          return Complex(substitute ? q * value : value * std::pow(u, b));
        },
        0.0, v_max, 1e-14 * norm2, 1e-12, 20000);
    return inner;
  };
  double inner_error = 0.0;
  const QuadratureResult outer = integrate(
      [&](double t) {
        const QuadratureResult c = column(t);
        inner_error = std::max(inner_error, c.error);
        return c.value;
      },
      theta, theta + 1.0, 1e-13 * norm2, 1e-12, 20000);
  return {outer.value.real() / norm2, theta, alpha, (outer.error + inner_error) / norm2};
}

std::vector<DirichletPolynomial> random_polynomial_corpus(std::size_t count, std::size_t max_degree,
                                                          std::uint64_t seed, bool zero_constant) {
  if (max_degree < 1 || (zero_constant && max_degree < 2)) throw DomainError("corpus max_degree too small");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> degree_dist(zero_constant ? 2 : 1, max_degree);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<DirichletPolynomial> corpus;
  corpus.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t degree = degree_dist(rng);
    const double scale = 1.0 / std::sqrt(static_cast<double>(degree));
    ComplexVector coeffs(degree);
    for (auto& a : coeffs) {
      const double re = normal(rng);
      const double im = normal(rng);
      a = scale * Complex(re, im);
    }
    if (zero_constant) coeffs[0] = 0.0;
    corpus.emplace_back(std::move(coeffs));
  }
  return corpus;
}

}  // namespace dirichlet_rkhs
