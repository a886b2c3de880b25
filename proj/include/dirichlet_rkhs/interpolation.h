#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dirichlet_rkhs/gram.h"

namespace dirichlet_rkhs {

inline constexpr std::size_t kMaxBlaschkeNodes = 64;
inline constexpr long kPrimeSearchLimit = 10000;

/// Product B(s) = prod_j (1 - p_j^{s_j - s}) with a simple zero at each node.
class DirichletBlaschke {
 public:
  DirichletBlaschke(PointSequence nodes, std::vector<long> primes);

  const PointSequence& nodes() const { return nodes_; }
  const std::vector<long>& primes() const { return primes_; }

  /// 1 - p_j^{s_j - s}
  Complex factor(std::size_t j, Complex s) const;
  Complex operator()(Complex s) const;
  /// B_j(s): the product with factor j omitted (never formed by division).
  Complex partial(std::size_t j, Complex s) const;
  /// B'(s_j) = B_j(s_j) log p_j
  Complex derivative_at_node(std::size_t j) const;

 private:
  PointSequence nodes_;
  std::vector<long> primes_;
  std::vector<double> log_primes_;
};

/// Greedy prime choice: for node j the first prime p whose factor's zero set
/// {s_j + 2 pi i k / log p} stays at least 1e-8 away from every other node.
std::vector<long> select_primes(const PointSequence& nodes);

/// Builds B from select_primes(nodes).
DirichletBlaschke make_blaschke(const PointSequence& nodes);

enum class InterpolantKind { KernelCombination, BlaschkeLagrange };

/// f(s_j) = a_j solved either as sum_j c_j k_{s_j} (minimal norm) or as
/// sum_j c_j B_j(s) with c_j = a_j / B_j(s_j).
class Interpolant {
 public:
  Interpolant(SpaceId space, PointSequence nodes, ComplexVector targets, ComplexVector coefficients,
              InterpolantKind kind, std::optional<DirichletBlaschke> blaschke, EvalConfig cfg);

  const SpaceId& space() const { return space_; }
  const PointSequence& nodes() const { return nodes_; }
  const ComplexVector& targets() const { return targets_; }
  const ComplexVector& coefficients() const { return coefficients_; }
  InterpolantKind kind() const { return kind_; }
  const std::optional<DirichletBlaschke>& blaschke() const { return blaschke_; }

  Complex operator()(Complex s) const;

  /// |f(s_j) - a_j| per node, evaluated when the interpolant was built.
  const std::vector<double>& node_residuals() const { return residuals_; }
  double max_node_residual() const;
  /// Norm in `space`: sqrt(conj(a) . c) for kernel combinations; the
  /// coefficient l2 norm of the expanded Dirichlet polynomial for the
  /// Blaschke form. Empty when not computed.
  const std::optional<double>& norm() const { return norm_; }
  void set_norm(double value) { norm_ = value; }
  /// (sum_j |a_j|^2 / |k_{s_j}|^2)^{1/2}
  double weighted_target_norm() const { return weighted_target_norm_; }
  void set_weighted_target_norm(double value) { weighted_target_norm_ = value; }

 private:
  SpaceId space_;
  PointSequence nodes_;
  ComplexVector targets_;
  ComplexVector coefficients_;
  InterpolantKind kind_;
  std::optional<DirichletBlaschke> blaschke_;
  EvalConfig cfg_;
  std::vector<double> residuals_;
  std::optional<double> norm_;
  double weighted_target_norm_ = 0.0;
};

/// Lagrange-type interpolant f_0 = sum_j a_j B_j(s) / B_j(s_j), an element of
/// H. NumericalError if some |B_j(s_j)| < 1e-12; SizeError above 64 nodes.
Interpolant finite_interpolant(const PointSequence& nodes, const ComplexVector& targets,
                               const EvalConfig& cfg = {});

/// Minimal-norm interpolant sum_j c_j k_{s_j} with Gram system K c = a.
/// IllConditionedError for near-degenerate node sets.
Interpolant min_norm_interpolant(const SpaceId& space, const PointSequence& nodes,
                                 const ComplexVector& targets, const EvalConfig& cfg = {});

/// Dirichlet coefficients (n, a_n), n ascending and a_n != 0, of a
/// BlaschkeLagrange interpolant. SizeError if an index exceeds max_index.
std::vector<std::pair<std::uint64_t, Complex>> dirichlet_expansion(const Interpolant& f,
                                                                   std::uint64_t max_index = 1000000000ULL);

}  // namespace dirichlet_rkhs
