#pragma once

#include <optional>

#include <Eigen/Dense>

#include "dirichlet_rkhs/kernels.h"

namespace dirichlet_rkhs {

inline constexpr std::size_t kDefaultGramCap = 512;

/// Normalized Gram matrix G[l][j] = k_{s_j}(s_l) / (|k_{s_j}| |k_{s_l}|).
/// Stored entries are exactly Hermitian with unit diagonal.
class GramMatrix {
 public:
  /// Wraps an explicit matrix; checks Hermitian symmetry (1e-12) and unit
  /// diagonal (1e-10) and then symmetrizes the stored copy.
  explicit GramMatrix(Eigen::MatrixXcd entries, std::optional<SpaceId> space = std::nullopt,
                      std::optional<PointSequence> sequence = std::nullopt);

  const Eigen::MatrixXcd& entries() const { return entries_; }
  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  Complex operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }
  const std::optional<SpaceId>& space() const { return space_; }
  const std::optional<PointSequence>& sequence() const { return sequence_; }

 private:
  Eigen::MatrixXcd entries_;
  std::optional<SpaceId> space_;
  std::optional<PointSequence> sequence_;
};

/// Assembles the normalized Gram matrix of `sequence` in `space`. Only the
/// upper triangle is evaluated. Throws SizeError above `cap` points.
GramMatrix gram_matrix(const SpaceId& space, const PointSequence& sequence,
                       const EvalConfig& cfg = {}, std::size_t cap = kDefaultGramCap);

/// Kernel norms |k_{s_j}| in sequence order.
std::vector<double> kernel_norms(const SpaceId& space, const PointSequence& sequence,
                                 const EvalConfig& cfg = {});

struct EigenPair {
  double value;
  Eigen::VectorXcd vector;
  double residual;  // |G v - lambda v|
};

/// Smallest eigenvalue with its eigenvector and residual certificate.
/// ConvergenceError if the residual exceeds 1e-10 max(1, lambda_max).
EigenPair smallest_eigenpair(const GramMatrix& gram);
double smallest_eigenvalue(const GramMatrix& gram);
/// All eigenvalues ascending.
Eigen::VectorXd eigenvalues(const GramMatrix& gram);

/// Solves G c = b by Cholesky. IllConditionedError on a pivot below 1e-12 or
/// if the residual |Gc - b| exceeds 1e-10 |b| after one refinement step.
ComplexVector solve_hermitian_pd(const GramMatrix& gram, const ComplexVector& rhs);

}  // namespace dirichlet_rkhs
