#include <cmath>
#include <vector>

#include "dirichlet_rkhs/errors.h"
#include "dirichlet_rkhs/gram.h"
#include "dirichlet_rkhs/zeta.h"
#include "doctest.h"
#include "oracles.h"
#include "test_support.h"

using namespace dirichlet_rkhs;

namespace {

Eigen::MatrixXcd random_hermitian_pd(oracle::Gen& gen, int n, double shift) {
  Eigen::MatrixXcd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = gen.gaussian();
  Eigen::MatrixXcd a = b * b.adjoint();
  a += shift * Eigen::MatrixXcd::Identity(n, n);
  // Unit diagonal by congruence with the diagonal scaling.
  Eigen::VectorXd d = a.diagonal().real().cwiseSqrt().cwiseInverse();
  return d.asDiagonal() * a * d.asDiagonal();
}

std::vector<std::vector<Complex>> to_rows(const Eigen::MatrixXcd& m) {
  std::vector<std::vector<Complex>> rows(m.rows(), std::vector<Complex>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace

TEST_CASE("single point Gram matrix is [[1]]") {
  const GramMatrix g = gram_matrix(SpaceId::hardy_dirichlet(), PointSequence({HalfPlanePoint(0.8, 2.0)}));
  CHECK(g.size() == 1);
  CHECK(g(0, 0) == Complex(1.0, 0.0));
}

TEST_CASE("far-separated real points in H") {
  const PointSequence seq({HalfPlanePoint(1.0, 0.0), HalfPlanePoint(20.0, 0.0)});
  const GramMatrix g = gram_matrix(SpaceId::hardy_dirichlet(), seq);
  const double expected = eval_zeta(21.0).real() / std::sqrt(eval_zeta(2.0).real() * eval_zeta(40.0).real());
  CHECK(std::abs(g(1, 0) - expected) < 1e-12);
  // |g| stays near 1/sqrt(zeta(2)) ~ 0.78 because k_{20} is almost the constant 1.
  CHECK(std::abs(std::abs(g(0, 1)) - 1.0 / std::sqrt(eval_zeta(2.0).real())) < 1e-6);
}

TEST_CASE("far-separated real points in H^2") {
  const PointSequence seq({HalfPlanePoint(1.0, 0.0), HalfPlanePoint(20.0, 0.0)});
  const GramMatrix g = gram_matrix(SpaceId::hardy_half_plane(), seq);
  const double rho = 19.0 / 20.0;
  CHECK(std::abs(std::abs(g(0, 1)) - std::sqrt(1.0 - rho * rho)) < 1e-14);
}

TEST_CASE("Gram matrices are exactly Hermitian with unit diagonal") {
  oracle::Gen gen(51);
  for (int i = 0; i < 10; ++i) {
    const auto seq = test_support::random_sequence(gen, 8, 0.55, 3.0, 5.0);
    const GramMatrix g = gram_matrix(SpaceId::hardy_dirichlet(), seq);
    CHECK((g.entries() - g.entries().adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(g(k, k) - 1.0) <= 1e-10);
  }
}

TEST_CASE("Gram entries follow G[l][j] = k_{s_j}(s_l) / (|k_{s_j}| |k_{s_l}|)") {
  const PointSequence seq({HalfPlanePoint(0.9, 1.0), HalfPlanePoint(1.4, -2.0), HalfPlanePoint(2.0, 0.5)});
  for (const auto& space : {SpaceId::hardy_dirichlet(), SpaceId::hardy_half_plane(), SpaceId::bergman_dirichlet(-2.0)}) {
    const GramMatrix g = gram_matrix(space, seq);
    const auto norms = kernel_norms(space, seq);
    for (std::size_t l = 0; l < seq.size(); ++l)
      for (std::size_t j = 0; j < seq.size(); ++j) {
        const Complex expected = kernel_value(space, seq[j], seq[l]) / (norms[j] * norms[l]);
        CHECK(std::abs(g(l, j) - expected) < 1e-12);
      }
  }
}

TEST_CASE("Gram size cap") {
  oracle::Gen gen(52);
  const auto seq = test_support::random_sequence(gen, 6, 0.6, 2.0, 3.0);
  CHECK_THROWS_AS(gram_matrix(SpaceId::hardy_half_plane(), seq, EvalConfig(), 5), SizeError);
  CHECK_NOTHROW(gram_matrix(SpaceId::hardy_half_plane(), seq, EvalConfig(), 6));
}

TEST_CASE("explicit Gram matrices are validated") {
  Eigen::MatrixXcd m(2, 2);
  m << 1.0, Complex(0.5, 0.1), Complex(0.5, 0.2), 1.0;
  CHECK_THROWS_AS(GramMatrix{m}, NumericalError);
  m << 1.1, 0.5, 0.5, 1.0;
  CHECK_THROWS_AS(GramMatrix{m}, NumericalError);
  m << 1.0, Complex(0.5, 0.1), Complex(0.5, -0.1), 1.0;
  CHECK_NOTHROW(GramMatrix{m});
}

TEST_CASE("smallest eigenvalue: closed forms") {
  CHECK(std::abs(smallest_eigenvalue(GramMatrix(Eigen::MatrixXcd::Identity(3, 3))) - 1.0) < 1e-15);
  Eigen::MatrixXcd m(2, 2);
  m << 1.0, 0.5, 0.5, 1.0;
  const GramMatrix g(m);
  CHECK(std::abs(smallest_eigenvalue(g) - 0.5) < 1e-15);
  const auto ev = eigenvalues(g);
  CHECK(std::abs(ev(0) + ev(1) - 2.0) < 1e-10);
  const EigenPair p = smallest_eigenpair(g);
  CHECK(p.residual <= 1e-10);
  CHECK(std::abs(std::abs(p.vector(0)) - std::sqrt(0.5)) < 1e-12);
}

TEST_CASE("smallest eigenvalue against characteristic-polynomial roots") {
  oracle::Gen gen(53);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXcd a = random_hermitian_pd(gen, 6, 0.05);
    const double root = oracle::smallest_char_root(to_rows(a), -0.5, 6.5, 1e-3);
    CHECK(std::abs(smallest_eigenvalue(GramMatrix(a)) - root) < 1e-8);
  }
}

TEST_CASE("eigenpair residual certificate") {
  oracle::Gen gen(54);
  for (int trial = 0; trial < 10; ++trial) {
    const auto seq = test_support::random_sequence(gen, 12, 0.55, 3.0, 6.0);
    const GramMatrix g = gram_matrix(SpaceId::hardy_dirichlet(), seq);
    const EigenPair p = smallest_eigenpair(g);
    const Eigen::VectorXcd r = g.entries() * p.vector - p.value * p.vector;
    CHECK(r.norm() <= 1e-10);
    CHECK(std::abs(p.vector.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("Hermitian positive-definite solves") {
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
  const ComplexVector b{Complex(1.0, 2.0), 3.0, Complex(0.0, -1.0), 0.5};
  const ComplexVector c = solve_hermitian_pd(GramMatrix(id), b);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(std::abs(c[i] - b[i]) < 1e-15);
  const ComplexVector zero = solve_hermitian_pd(GramMatrix(id), ComplexVector(4, 0.0));
  for (const auto& z : zero) CHECK(z == Complex(0.0, 0.0));

  oracle::Gen gen(55);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXcd a = random_hermitian_pd(gen, 5, 0.1);
    ComplexVector rhs;
    for (int i = 0; i < 5; ++i) rhs.push_back(gen.gaussian());
    const ComplexVector x = solve_hermitian_pd(GramMatrix(a), rhs);
    Eigen::VectorXcd xv = Eigen::Map<const Eigen::VectorXcd>(x.data(), 5);
    Eigen::VectorXcd bv = Eigen::Map<const Eigen::VectorXcd>(rhs.data(), 5);
    CHECK((a * xv - bv).norm() <= 1e-10 * bv.norm());
  }
}

TEST_CASE("near-singular systems raise IllConditionedError") {
  Eigen::MatrixXcd m(2, 2);
  const double g = 1.0 - 1e-14;
  m << 1.0, g, g, 1.0;
  CHECK_THROWS_AS(solve_hermitian_pd(GramMatrix(m), ComplexVector{1.0, 0.0}), IllConditionedError);
  CHECK_THROWS_AS(solve_hermitian_pd(GramMatrix(Eigen::MatrixXcd::Identity(2, 2)), ComplexVector{1.0}), SizeError);
}
