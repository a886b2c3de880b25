#include <cmath>

#include "dirichlet_rkhs/embeddings.h"
#include "dirichlet_rkhs/errors.h"
#include "doctest.h"
#include "oracles.h"

using namespace dirichlet_rkhs;

namespace {

DirichletPolynomial monomial(std::size_t n, Complex a = 1.0) {
  ComplexVector c(n, 0.0);
  c[n - 1] = a;
  return DirichletPolynomial(c);
}

}  // namespace

TEST_CASE("line embedding: single terms give 1/n") {
  for (std::size_t n : {1, 2, 5, 100}) {
    for (double theta : {0.0, 1.0, 10.0, 100.0}) {
      const auto r = line_embedding_ratio(monomial(n, Complex(0.3, -2.0)), theta);
      CHECK(std::abs(r.ratio - 1.0 / static_cast<double>(n)) < 1e-14);
      CHECK(r.theta == theta);
      CHECK_FALSE(r.alpha.has_value());
    }
  }
  CHECK(std::abs(line_embedding_ratio(DirichletPolynomial({1.0}), 7.0).ratio - 1.0) < 1e-15);
}

TEST_CASE("line embedding: two terms against Simpson and adaptive quadrature") {
  const DirichletPolynomial f({0.0, 1.0, 1.0});
  for (double theta : {0.0, 3.0, 100.0}) {
    const double simpson = oracle::simpson(
        [](double t) {
          const Complex s(0.5, t);
          return std::norm(std::exp(-s * std::log(2.0)) + std::exp(-s * std::log(3.0)));
        },
        theta, theta + 1.0, 2000).real();
    CHECK(std::abs(line_embedding_ratio(f, theta).ratio - simpson / 2.0) < 1e-10);
    CHECK(std::abs(line_embedding_ratio_quadrature(f, theta).ratio - simpson / 2.0) < 1e-9);
  }
}

TEST_CASE("line embedding: closed form matches quadrature on random two-term polynomials") {
  oracle::Gen gen(91);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexVector c(static_cast<std::size_t>(gen.integer(2, 30)), 0.0);
    c[0] = gen.gaussian();
    c.back() = gen.gaussian();
    const DirichletPolynomial f(c);
    const double theta = gen.uniform(0.0, 100.0);
    const auto exact = line_embedding_ratio(f, theta);
    const auto quad = line_embedding_ratio_quadrature(f, theta);
    CHECK(std::abs(exact.ratio - quad.ratio) < 1e-9);
    CHECK(exact.ratio >= 0.0);
  }
}

TEST_CASE("line embedding is invariant under a global phase") {
  oracle::Gen gen(92);
  ComplexVector c;
  for (int i = 0; i < 10; ++i) c.push_back(gen.gaussian());
  const DirichletPolynomial f(c);
  ComplexVector rotated = c;
  for (auto& a : rotated) a *= std::polar(1.0, 0.7);
  CHECK(std::abs(line_embedding_ratio(f, 4.0).ratio - line_embedding_ratio(DirichletPolynomial(rotated), 4.0).ratio) <
        1e-14);
}

TEST_CASE("half-strip embedding: closed forms") {
  CHECK(std::abs(halfstrip_embedding_ratio(monomial(2), 0.0, -1.0).ratio - std::log(3.0) / (4.0 * std::log(2.0))) <
        1e-14);
  for (double alpha : {0.5, 1.0}) CHECK(halfstrip_embedding_ratio(DirichletPolynomial({2.0}), 5.0, alpha).ratio == 0.0);
  // f = n^{-s}, alpha in (0, 1]: |f'|^2 = log^2 n n^{-1-2u}, int u^{1-alpha} e^{-2u log n} du.
  const double alpha = 0.5, n = 3.0;
  const double c = 2.0 * std::log(n);
  const double integral = std::log(n) * std::log(n) / n * std::tgamma(2.0 - alpha) / std::pow(c, 2.0 - alpha);
  const double norm2 = std::pow(std::log(n + 1.0), alpha);
  CHECK(std::abs(halfstrip_embedding_ratio(monomial(3), 2.0, alpha).ratio - integral / norm2) < 1e-13);
}

TEST_CASE("half-strip embedding: closed form matches nested quadrature") {
  oracle::Gen gen(93);
  for (double alpha : {-1.0, -0.5, 0.5, 1.0}) {
    for (int trial = 0; trial < 3; ++trial) {
      ComplexVector c(static_cast<std::size_t>(gen.integer(2, 6)), 0.0);
      for (std::size_t i = 1; i < c.size(); ++i) c[i] = gen.gaussian();
      const DirichletPolynomial f(c);
      const double theta = gen.uniform(0.0, 10.0);
      const double exact = halfstrip_embedding_ratio(f, theta, alpha).ratio;
      const double quad = halfstrip_embedding_ratio_quadrature(f, theta, alpha).ratio;
      CHECK(std::abs(exact - quad) < 1e-7 * std::max(1.0, exact));
      CHECK(exact > 0.0);
    }
  }
}

TEST_CASE("half-strip embedding errors") {
  CHECK_THROWS_AS(halfstrip_embedding_ratio(monomial(2), 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(halfstrip_embedding_ratio(monomial(2), 0.0, 1.5), DomainError);
  CHECK_THROWS_AS(halfstrip_embedding_ratio(DirichletPolynomial({1.0, 1.0}), 0.0, -1.0), DomainError);
  CHECK_THROWS_AS(line_embedding_ratio(monomial(10001), 0.0), SizeError);
}

TEST_CASE("random corpus: determinism, shape and scale") {
  const auto a = random_polynomial_corpus(50, 100, 7);
  const auto b = random_polynomial_corpus(50, 100, 7);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].coeffs() == b[i].coeffs());
    CHECK(a[i].degree() >= 1);
    CHECK(a[i].degree() <= 100);
  }
  CHECK(random_polynomial_corpus(0, 100, 7).empty());
  CHECK(random_polynomial_corpus(5, 100, 8)[0].coeffs() != a[0].coeffs());
  const auto big = random_polynomial_corpus(400, 100, 9);
  double mean = 0.0;
  for (const auto& f : big) mean += f.norm_squared();
  mean /= static_cast<double>(big.size());
  CHECK(std::abs(mean - 1.0) < 0.2);
  for (const auto& f : random_polynomial_corpus(20, 10, 3, true)) {
    CHECK(f.coeff(1) == Complex(0.0, 0.0));
    CHECK(f.degree() >= 2);
  }
  CHECK_THROWS_AS(random_polynomial_corpus(1, 1, 3, true), DomainError);
}
