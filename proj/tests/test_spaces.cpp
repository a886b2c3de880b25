#include <cmath>

#include "dirichlet_rkhs/errors.h"
#include "dirichlet_rkhs/spaces.h"
#include "doctest.h"
#include "oracles.h"

using namespace dirichlet_rkhs;

TEST_CASE("half-plane points reject sigma <= 1/2 and non-finite values") {
  CHECK_NOTHROW(HalfPlanePoint(0.5000001, -3.0));
  CHECK_THROWS_AS(HalfPlanePoint(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(HalfPlanePoint(0.2, 1.0), DomainError);
  CHECK_THROWS_AS(HalfPlanePoint(NAN, 1.0), DomainError);
  CHECK_THROWS_AS(HalfPlanePoint(1.0, INFINITY), DomainError);
  const HalfPlanePoint p(1.25, -2.0);
  CHECK(p.value() == Complex(1.25, -2.0));
}

TEST_CASE("space ids: factories, tags, labels") {
  CHECK(SpaceId::hardy_dirichlet().tag() == "h");
  CHECK(SpaceId::hardy_half_plane().tag() == "h2");
  CHECK(SpaceId::weighted_dirichlet(-1.0).label() == "h_alpha(-1)");
  CHECK(SpaceId::bergman_dirichlet(0.5).label() == "d_alpha(0.5)");
  CHECK(SpaceId::parse("d_alpha", 1.0) == SpaceId::bergman_dirichlet(1.0));
  CHECK(SpaceId::parse("h", std::nullopt) == SpaceId::hardy_dirichlet());
  CHECK(SpaceId::hardy_dirichlet().is_dirichlet_series_space());
  CHECK(SpaceId::weighted_dirichlet(0.5).is_dirichlet_series_space());
  CHECK_FALSE(SpaceId::hardy_half_plane().is_dirichlet_series_space());
  CHECK_FALSE(SpaceId::bergman_dirichlet(-2.0).is_dirichlet_series_space());
}

TEST_CASE("space ids: invalid parameters") {
  CHECK_THROWS_AS(SpaceId::weighted_dirichlet(1.5), DomainError);
  CHECK_THROWS_AS(SpaceId::bergman_dirichlet(0.0), DomainError);
  CHECK_THROWS_AS(SpaceId::bergman_dirichlet(2.0), DomainError);
  CHECK_THROWS_AS(SpaceId::parse("h_alpha", std::nullopt), DomainError);
  CHECK_THROWS_AS(SpaceId::parse("bergman", 0.5), DomainError);
}

TEST_CASE("point sequences: distinctness and bounding box") {
  CHECK_THROWS_AS(PointSequence({HalfPlanePoint(1.0, 0.0), HalfPlanePoint(1.0, 1e-13)}), DomainError);
  CHECK_NOTHROW(PointSequence({HalfPlanePoint(1.0, 0.0), HalfPlanePoint(1.0, 1e-11)}));
  const PointSequence s({HalfPlanePoint(1.5, -4.0), HalfPlanePoint(0.7, 2.0)});
  CHECK(s.size() == 2);
  CHECK(s.max_sigma() == 1.5);
  CHECK(s.max_abs_t() == 4.0);
  const PointSequence moved = s.translated(10.0);
  CHECK(moved[0].t() == 6.0);
  CHECK(moved[1].sigma() == 0.7);
  CHECK(PointSequence().empty());
}

TEST_CASE("Dirichlet polynomials: canonical form") {
  const DirichletPolynomial f({1.0, 0.0, Complex(0.0, 2.0), 0.0, 0.0});
  CHECK(f.degree() == 3);
  CHECK(f.coeff(3) == Complex(0.0, 2.0));
  CHECK_THROWS_AS(DirichletPolynomial({0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(DirichletPolynomial(ComplexVector{}), DomainError);
}

TEST_CASE("Dirichlet polynomials: evaluation, derivative, norms") {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexVector c;
    const int n = gen.integer(1, 12);
    for (int i = 0; i < n; ++i) c.push_back(gen.gaussian());
    const DirichletPolynomial f(c);
    const Complex s = gen.complex_in(0.6, 3.0, -10.0, 10.0);
    Complex direct = 0.0;
    double norm2 = 0.0, wnorm2 = 0.0;
    for (int k = 1; k <= n; ++k) {
      direct += c[k - 1] / std::pow(Complex(k, 0.0), s);
      norm2 += std::norm(c[k - 1]);
      wnorm2 += std::norm(c[k - 1]) * std::pow(std::log(k + 1.0), -0.5);
    }
    CHECK(std::abs(f(s) - direct) < 1e-12 * std::max(1.0, std::abs(direct)));
    const double h = 1e-5;
    const Complex fd = (f(s + h) - f(s - h)) / (2.0 * h);
    CHECK(std::abs(f.derivative(s) - fd) < 1e-7 * std::max(1.0, std::abs(fd)));
    CHECK(std::abs(f.norm_squared() - norm2) < 1e-12 * norm2);
    CHECK(std::abs(f.weighted_norm_squared(-0.5) - wnorm2) < 1e-12 * wnorm2);
  }
  CHECK(DirichletPolynomial({3.0}).derivative(Complex(1.0, 1.0)) == Complex(0.0, 0.0));
}
