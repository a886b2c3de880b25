#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dirichlet_rkhs/types.h"

namespace dirichlet_rkhs {

/// A point s = sigma + i t of the half-plane sigma > 1/2.
class HalfPlanePoint {
 public:
  HalfPlanePoint(double sigma, double t);
  explicit HalfPlanePoint(Complex s) : HalfPlanePoint(s.real(), s.imag()) {}

  double sigma() const { return sigma_; }
  double t() const { return t_; }
  Complex value() const { return {sigma_, t_}; }

  friend bool operator==(const HalfPlanePoint&, const HalfPlanePoint&) = default;

 private:
  double sigma_;
  double t_;
};

enum class SpaceFamily {
  HardyDirichlet,             // H: square-summable coefficients
  WeightedDirichlet,          // H_alpha: weights log^alpha(n+1)
  HardyHalfPlane,             // H^2(C_{1/2})
  BergmanDirichletHalfPlane,  // D_alpha(C_{1/2}): Bergman (alpha<0), Dirichlet-type (0<alpha<=1)
};

/// Selects one of the function spaces. alpha is carried only by the two
/// parameterised families; it must satisfy alpha <= 1, and alpha != 0 for D_alpha.
class SpaceId {
 public:
  static SpaceId hardy_dirichlet() { return SpaceId(SpaceFamily::HardyDirichlet, std::nullopt); }
  static SpaceId weighted_dirichlet(double alpha);
  static SpaceId hardy_half_plane() { return SpaceId(SpaceFamily::HardyHalfPlane, std::nullopt); }
  static SpaceId bergman_dirichlet(double alpha);

  /// Parses the CLI/JSON tags "h", "h_alpha", "h2", "d_alpha".
  static SpaceId parse(const std::string& tag, std::optional<double> alpha);

  SpaceFamily family() const { return family_; }
  const std::optional<double>& alpha() const { return alpha_; }

  /// Short tag without the parameter: "h", "h_alpha", "h2", "d_alpha".
  std::string tag() const;
  /// Tag with the parameter, e.g. "d_alpha(-1)". Stable, used as a JSON key.
  std::string label() const;

  /// True for the Dirichlet-series spaces H and H_alpha.
  bool is_dirichlet_series_space() const {
    return family_ == SpaceFamily::HardyDirichlet || family_ == SpaceFamily::WeightedDirichlet;
  }

  friend bool operator==(const SpaceId&, const SpaceId&) = default;

 private:
  SpaceId(SpaceFamily family, std::optional<double> alpha) : family_(family), alpha_(alpha) {}
  SpaceFamily family_;
  std::optional<double> alpha_;
};

/// Ordered list of pairwise distinct half-plane points.
class PointSequence {
 public:
  PointSequence() = default;
  explicit PointSequence(std::vector<HalfPlanePoint> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const HalfPlanePoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<HalfPlanePoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  double max_sigma() const { return max_sigma_; }
  double max_abs_t() const { return max_abs_t_; }

  /// Every point shifted by i*tau.
  PointSequence translated(double tau) const;

 private:
  std::vector<HalfPlanePoint> points_;
  double max_sigma_ = 0.0;
  double max_abs_t_ = 0.0;
};

/// f(s) = sum_{n=1}^N a_n n^{-s}, stored with a nonzero trailing coefficient.
class DirichletPolynomial {
 public:
  explicit DirichletPolynomial(ComplexVector coeffs);

  std::size_t degree() const { return coeffs_.size(); }
  const ComplexVector& coeffs() const { return coeffs_; }
  /// Coefficient a_n, 1-based.
  Complex coeff(std::size_t n) const { return coeffs_[n - 1]; }

  Complex operator()(Complex s) const;
  Complex derivative(Complex s) const;

  /// sum |a_n|^2
  double norm_squared() const;
  /// sum |a_n|^2 log^alpha(n+1)
  double weighted_norm_squared(double alpha) const;

 private:
  ComplexVector coeffs_;
};

}  // namespace dirichlet_rkhs
