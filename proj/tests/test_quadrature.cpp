#include <cmath>

#include "dirichlet_rkhs/errors.h"
#include "dirichlet_rkhs/quadrature.h"
#include "dirichlet_rkhs/special_functions.h"
#include "doctest.h"

using namespace dirichlet_rkhs;

TEST_CASE("polynomials are integrated exactly") {
  const auto r = integrate([](double x) { return Complex(x * x, 0.0); }, 0.0, 3.0, 1e-14, 1e-14);
  CHECK(std::abs(r.value - 9.0) < 1e-13);
  CHECK(r.error <= 1e-12);
}

TEST_CASE("smooth and complex-valued integrands") {
  const auto s = integrate([](double x) { return Complex(std::sin(x), 0.0); }, 0.0, kPi, 1e-13, 1e-13);
  CHECK(std::abs(s.value - 2.0) < 1e-12);
  const auto e = integrate([](double x) { return std::exp(Complex(0.0, 3.0 * x)); }, 0.0, 1.0, 1e-13, 1e-13);
  const Complex exact = (std::exp(Complex(0.0, 3.0)) - 1.0) / Complex(0.0, 3.0);
  CHECK(std::abs(e.value - exact) < 1e-12);
}

TEST_CASE("integrable endpoint singularity") {
  const auto r = integrate([](double x) { return Complex(1.0 / std::sqrt(x), 0.0); }, 0.0, 1.0, 1e-10, 1e-10);
  CHECK(std::abs(r.value - 2.0) < 1e-8);
}

TEST_CASE("oscillatory integrand on a long interval") {
  const auto r = integrate([](double x) { return Complex(std::cos(50.0 * x), 0.0); }, 0.0, 10.0, 1e-12, 1e-12);
  CHECK(std::abs(r.value - std::sin(500.0) / 50.0) < 1e-10);
}

TEST_CASE("reversed and empty intervals") {
  const auto r = integrate([](double x) { return Complex(x, 0.0); }, 2.0, 0.0, 1e-14, 1e-14);
  CHECK(std::abs(r.value + 2.0) < 1e-14);
  CHECK(integrate([](double) { return Complex(1.0, 0.0); }, 1.0, 1.0, 1e-14, 1e-14).value == Complex(0.0, 0.0));
}

TEST_CASE("interval budget exhaustion raises ConvergenceError") {
  auto wild = [](double x) { return Complex(std::sin(1.0 / (x + 1e-12)), 0.0); };
  CHECK_THROWS_AS(integrate(wild, 0.0, 1.0, 1e-15, 1e-15, 20), ConvergenceError);
}
