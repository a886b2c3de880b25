#pragma once

#include <cmath>
#include <vector>

#include "dirichlet_rkhs/spaces.h"
#include "oracles.h"

namespace test_support {

using dirichlet_rkhs::HalfPlanePoint;
using dirichlet_rkhs::PointSequence;

/// Eight points on sigma = 1 with consecutive pseudohyperbolic distance delta.
inline PointSequence merging_family(double delta) {
  const double step = delta / std::sqrt(1.0 - delta * delta);
  std::vector<HalfPlanePoint> pts;
  for (int k = 0; k < 8; ++k) pts.emplace_back(1.0, k * step);
  return PointSequence(pts);
}

/// n random points with sigma in (sigma_lo, sigma_hi) and |t| <= t_abs.
inline PointSequence random_sequence(oracle::Gen& gen, int n, double sigma_lo, double sigma_hi, double t_abs) {
  std::vector<HalfPlanePoint> pts;
  for (int i = 0; i < n; ++i) pts.emplace_back(gen.uniform(sigma_lo, sigma_hi), gen.uniform(-t_abs, t_abs));
  return PointSequence(pts);
}

inline PointSequence geometric_sequence(int count) {
  std::vector<HalfPlanePoint> pts;
  for (int j = 1; j <= count; ++j) pts.emplace_back(0.5 + std::ldexp(1.0, -j), 0.0);
  return PointSequence(pts);
}

inline PointSequence equidistributed_sequence(int jmax) {
  std::vector<HalfPlanePoint> pts;
  for (int j = 1; j <= jmax; ++j)
    for (int l = 1; l <= j; ++l) pts.emplace_back(0.5 + std::ldexp(1.0, -j), 1.0 / l);
  return PointSequence(pts);
}

/// Spearman rank correlation of two samples without ties.
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      double rank = 0;
      for (std::size_t j = 0; j < v.size(); ++j) rank += v[j] < v[i];
      r[i] = rank;
    }
    return r;
  };
  const auto rx = ranks(x), ry = ranks(y);
  const double n = static_cast<double>(x.size());
  double d2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

}  // namespace test_support
