#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dirichlet_rkhs/spaces.h"

namespace dirichlet_rkhs {

struct EmbeddingResult {
  double ratio;            // boundary or area integral over the squared space norm
  double theta;            // window [theta, theta + 1] in t
  std::optional<double> alpha;
  double quadrature_error; // estimated absolute error of `ratio`
};

/// int_theta^{theta+1} |f(1/2 + it)|^2 dt / sum |a_n|^2, summed exactly over
/// coefficient pairs. Degree is capped at 1e4.
EmbeddingResult line_embedding_ratio(const DirichletPolynomial& f, double theta);

/// Same ratio by adaptive Gauss-Kronrod quadrature of the boundary integral.
EmbeddingResult line_embedding_ratio_quadrature(const DirichletPolynomial& f, double theta);

/// Half-strip Q_theta = {sigma > 1/2, theta < t < theta + 1}:
///   alpha < 0:       int |f|^2 (sigma - 1/2)^{-alpha-1} dm / |f|^2_{H_alpha}
///   0 < alpha <= 1:  int |f'|^2 (sigma - 1/2)^{1-alpha} dm / |f|^2_{H_alpha}
/// The sigma-integral is done per coefficient pair with
/// int_0^inf u^b e^{-cu} du = Gamma(b+1) / c^{b+1}. DomainError for alpha = 0,
/// alpha > 1, or alpha < 0 with a_1 != 0 (the integral diverges).
EmbeddingResult halfstrip_embedding_ratio(const DirichletPolynomial& f, double theta, double alpha);

/// Same ratio by nested adaptive quadrature, with the strip cut at
/// sigma = 1/2 + 60/log 2.
EmbeddingResult halfstrip_embedding_ratio_quadrature(const DirichletPolynomial& f, double theta, double alpha);

/// Deterministic corpus: degree uniform in [1, max_degree], coefficients
/// standard complex Gaussian (E|a|^2 = 1) scaled by 1/sqrt(degree), drawn
/// from std::mt19937_64(seed). With zero_constant set, a_1 = 0 and degree >= 2.
std::vector<DirichletPolynomial> random_polynomial_corpus(std::size_t count, std::size_t max_degree,
                                                          std::uint64_t seed, bool zero_constant = false);

}  // namespace dirichlet_rkhs
