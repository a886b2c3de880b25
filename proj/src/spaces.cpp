#include "dirichlet_rkhs/spaces.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dirichlet_rkhs/errors.h"

namespace dirichlet_rkhs {

namespace {

constexpr double kMinSeparation = 1e-12;

std::string format_alpha(double alpha) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", alpha);
  return buf;
}

}  // namespace

HalfPlanePoint::HalfPlanePoint(double sigma, double t) : sigma_(sigma), t_(t) {
  if (!(sigma > 0.5) || !std::isfinite(sigma) || !std::isfinite(t)) {
    throw DomainError("point " + format_alpha(sigma) + " + i" + format_alpha(t) +
                      " is not in the half-plane sigma > 1/2");
  }
}

SpaceId SpaceId::weighted_dirichlet(double alpha) {
  if (!(alpha <= 1.0)) throw DomainError("H_alpha requires alpha <= 1");
  return SpaceId(SpaceFamily::WeightedDirichlet, alpha);
}

SpaceId SpaceId::bergman_dirichlet(double alpha) {
  if (!(alpha <= 1.0)) throw DomainError("D_alpha requires alpha <= 1");
  if (alpha == 0.0) throw DomainError("D_alpha with alpha = 0 is H^2; use the h2 space");
  return SpaceId(SpaceFamily::BergmanDirichletHalfPlane, alpha);
}

SpaceId SpaceId::parse(const std::string& tag, std::optional<double> alpha) {
  auto need_alpha = [&]() {
    if (!alpha) throw DomainError("space '" + tag + "' requires alpha");
    return *alpha;
  };
  if (tag == "h") return hardy_dirichlet();
  if (tag == "h2") return hardy_half_plane();
  if (tag == "h_alpha") return weighted_dirichlet(need_alpha());
  if (tag == "d_alpha") return bergman_dirichlet(need_alpha());
  throw DomainError("unknown space '" + tag + "'");
}

std::string SpaceId::tag() const {
  switch (family_) {
    case SpaceFamily::HardyDirichlet: return "h";
    case SpaceFamily::WeightedDirichlet: return "h_alpha";
    case SpaceFamily::HardyHalfPlane: return "h2";
    case SpaceFamily::BergmanDirichletHalfPlane: return "d_alpha";
  }
  return "?";
}

std::string SpaceId::label() const {
  if (!alpha_) return tag();
  return tag() + "(" + format_alpha(*alpha_) + ")";
}

PointSequence::PointSequence(std::vector<HalfPlanePoint> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    max_sigma_ = std::max(max_sigma_, points_[i].sigma());
    max_abs_t_ = std::max(max_abs_t_, std::abs(points_[i].t()));
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(points_[i].value() - points_[j].value()) <= kMinSeparation) {
        throw DomainError("point sequence has coincident points at indices " + std::to_string(j) +
                          " and " + std::to_string(i));
      }
    }
  }
}

PointSequence PointSequence::translated(double tau) const {
  std::vector<HalfPlanePoint> moved;
  moved.reserve(points_.size());
  for (const auto& p : points_) moved.emplace_back(p.sigma(), p.t() + tau);
  return PointSequence(std::move(moved));
}

DirichletPolynomial::DirichletPolynomial(ComplexVector coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
  if (coeffs_.empty()) throw DomainError("Dirichlet polynomial must have a nonzero coefficient");
}

Complex DirichletPolynomial::operator()(Complex s) const {
  Complex sum = 0.0;
  for (std::size_t n = 1; n <= coeffs_.size(); ++n) {
    if (coeffs_[n - 1] == Complex(0.0)) continue;
    sum += coeffs_[n - 1] * std::exp(-s * std::log(static_cast<double>(n)));
  }
  return sum;
}

Complex DirichletPolynomial::derivative(Complex s) const {
  Complex sum = 0.0;
  for (std::size_t n = 2; n <= coeffs_.size(); ++n) {
    if (coeffs_[n - 1] == Complex(0.0)) continue;
    const double ln = std::log(static_cast<double>(n));
    sum -= coeffs_[n - 1] * ln * std::exp(-s * ln);
  }
  return sum;
}

double DirichletPolynomial::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : coeffs_) sum += std::norm(a);
  return sum;
}

double DirichletPolynomial::weighted_norm_squared(double alpha) const {
  double sum = 0.0;
  for (std::size_t n = 1; n <= coeffs_.size(); ++n) {
    sum += std::norm(coeffs_[n - 1]) * std::pow(std::log1p(static_cast<double>(n)), alpha);
  }
  return sum;
}

}  // namespace dirichlet_rkhs
