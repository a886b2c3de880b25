#include <cmath>

#include "dirichlet_rkhs/errors.h"
#include "dirichlet_rkhs/special_functions.h"
#include "doctest.h"
#include "oracles.h"

using namespace dirichlet_rkhs;

TEST_CASE("gamma at small integers and one half") {
  CHECK(eval_gamma(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eval_gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(eval_gamma(0.5) - 1.7724538509055160273) < 1e-10);
}

TEST_CASE("gamma matches factorials to 1e-12 relative") {
  double factorial = 1.0;
  for (int n = 1; n <= 20; ++n) {
    CHECK(std::abs(eval_gamma(n) - factorial) <= 1e-12 * factorial);
    factorial *= n;
  }
}

TEST_CASE("gamma recurrence on random arguments") {
  oracle::Gen gen(11);
  for (int i = 0; i < 100; ++i) {
    const double x = gen.uniform(0.05, 30.0);
    CHECK(std::abs(eval_gamma(x + 1.0) - x * eval_gamma(x)) <= 1e-12 * eval_gamma(x + 1.0));
  }
}

TEST_CASE("gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(eval_gamma(0.0), DomainError);
  CHECK_THROWS_AS(eval_gamma(-1.5), DomainError);
}

TEST_CASE("upper gamma with a = 1 is the exponential") {
  CHECK(std::abs(eval_upper_gamma(1.0, 1.0) - std::exp(-1.0)) < 1e-12);
  CHECK(std::abs(eval_upper_gamma(1.0, 0.001) - 0.99900049983337499) < 1e-12);
  for (Complex z : {Complex(3.0, 4.0), Complex(0.2, 0.5), Complex(25.0, -7.0), Complex(0.01, 30.0)}) {
    CHECK(std::abs(eval_upper_gamma(1.0, z) - std::exp(-z)) < 1e-10 * std::max(1.0, std::abs(std::exp(-z))));
  }
}

TEST_CASE("upper gamma agrees with quadrature of its defining integral") {
  const double quad = oracle::upper_gamma_quadrature(0.5, 2.0);
  CHECK(std::abs(eval_upper_gamma(0.5, 2.0).real() - quad) < 1e-8);
  CHECK(std::abs(eval_upper_gamma(0.5, 2.0).real() - std::sqrt(kPi) * std::erfc(std::sqrt(2.0))) < 1e-12);
  for (double a : {-0.7, 0.3, 1.5, 2.5}) {
    for (double x : {0.1, 0.9, 3.0, 8.0}) {
      const double ref = oracle::upper_gamma_quadrature(a, x);
      CHECK(std::abs(eval_upper_gamma(a, x).real() - ref) < 1e-8 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("exponential integral E1 at 1") {
  CHECK(std::abs(eval_upper_gamma(0.0, 1.0).real() - 0.21938393439552027368) < 1e-12);
  CHECK(std::abs(eval_upper_gamma(0.0, 0.3).real() - 0.90567665167584346) < 1e-12);
}

TEST_CASE("upper gamma recurrence Gamma(a+1, z) = a Gamma(a, z) + z^a e^-z") {
  oracle::Gen gen(12);
  for (int i = 0; i < 200; ++i) {
    const double a = gen.uniform(-0.95, 3.0);
    const Complex z = gen.complex_in(0.05, 20.0, -20.0, 20.0);
    const Complex lhs = eval_upper_gamma(a + 1.0, z);
    const Complex rhs = a * eval_upper_gamma(a, z) + std::exp(a * std::log(z) - z);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("upper gamma rejects the closed left half-plane") {
  CHECK_THROWS_AS(eval_upper_gamma(0.5, Complex(0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(eval_upper_gamma(0.5, Complex(-1.0, 0.0)), DomainError);
}

TEST_CASE("expm1 and exprel are accurate near zero") {
  for (Complex z : {Complex(1e-12, 0.0), Complex(1e-8, -3e-9), Complex(0.3, 0.4), Complex(-2.0, 5.0)}) {
    const Complex series = z + z * z / 2.0 + z * z * z / 6.0 + z * z * z * z / 24.0;
    const Complex ref = std::abs(z) < 1e-3 ? series : std::exp(z) - 1.0;
    CHECK(std::abs(dirichlet_rkhs::expm1(z) - ref) <= 1e-15 * std::max(std::abs(ref), 1e-300) + 1e-16 * std::abs(z));
    CHECK(std::abs(exprel(z) - ref / z) <= 1e-14);
  }
  CHECK(exprel(Complex(0.0, 0.0)) == Complex(1.0, 0.0));
}
