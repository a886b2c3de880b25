#pragma once

#include <complex>
#include <vector>

namespace dirichlet_rkhs {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

}  // namespace dirichlet_rkhs
