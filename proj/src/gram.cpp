#include "dirichlet_rkhs/gram.h"

#include <cmath>
#include <string>

#include "dirichlet_rkhs/errors.h"
#include "dirichlet_rkhs/parallel.h"

namespace dirichlet_rkhs {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kDiagonalTolerance = 1e-10;
constexpr double kEigenResidual = 1e-10;
constexpr double kMinPivot = 1e-12;
constexpr double kSolveResidual = 1e-10;

}  // namespace

GramMatrix::GramMatrix(Eigen::MatrixXcd entries, std::optional<SpaceId> space,
                       std::optional<PointSequence> sequence)
    : entries_(std::move(entries)), space_(std::move(space)), sequence_(std::move(sequence)) {
  if (entries_.rows() != entries_.cols()) throw SizeError("Gram matrix must be square");
  const Eigen::Index n = entries_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(entries_(i, i) - 1.0) > kDiagonalTolerance) {
      throw NumericalError("Gram diagonal entry " + std::to_string(i) + " is not 1");
    }
    entries_(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(entries_(i, j) - std::conj(entries_(j, i))) > kHermitianTolerance) {
        throw NumericalError("Gram matrix is not Hermitian");
      }
      entries_(j, i) = std::conj(entries_(i, j));
    }
  }
}

std::vector<double> kernel_norms(const SpaceId& space, const PointSequence& sequence,
                                 const EvalConfig& cfg) {
  std::vector<double> norms(sequence.size());
  parallel_for(sequence.size(), [&](std::size_t j) { norms[j] = kernel_norm(space, sequence[j], cfg); });
  return norms;
}

GramMatrix gram_matrix(const SpaceId& space, const PointSequence& sequence, const EvalConfig& cfg,
                       std::size_t cap) {
  const std::size_t n = sequence.size();
  if (n == 0) throw SizeError("Gram matrix of an empty sequence");
  if (n > cap) {
    throw SizeError("sequence of " + std::to_string(n) + " points exceeds Gram cap " + std::to_string(cap));
  }
  const std::vector<double> norms = kernel_norms(space, sequence, cfg);
  Eigen::MatrixXcd g(n, n);
  // Row l, column j > l holds k_{s_j}(s_l).
  parallel_for(n, [&](std::size_t l) {
    g(l, l) = 1.0;
    for (std::size_t j = l + 1; j < n; ++j) {
      g(l, j) = kernel_value(space, sequence[j], sequence[l], cfg) / (norms[j] * norms[l]);
      g(j, l) = std::conj(g(l, j));
    }
  });
  return GramMatrix(std::move(g), space, sequence);
}

EigenPair smallest_eigenpair(const GramMatrix& gram) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram.entries());
  if (solver.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  const double lambda = solver.eigenvalues()(0);
  const double lambda_max = solver.eigenvalues()(solver.eigenvalues().size() - 1);
  Eigen::VectorXcd v = solver.eigenvectors().col(0);
  const double residual = (gram.entries() * v - lambda * v).norm();
  if (residual > kEigenResidual * std::max(1.0, std::abs(lambda_max))) {
    throw ConvergenceError("eigenpair residual " + std::to_string(residual) + " above certificate");
  }
  return {lambda, std::move(v), residual};
}

double smallest_eigenvalue(const GramMatrix& gram) { return smallest_eigenpair(gram).value; }

Eigen::VectorXd eigenvalues(const GramMatrix& gram) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram.entries(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  return solver.eigenvalues();
}

ComplexVector solve_hermitian_pd(const GramMatrix& gram, const ComplexVector& rhs) {
  const auto n = static_cast<Eigen::Index>(gram.size());
  if (static_cast<Eigen::Index>(rhs.size()) != n) throw SizeError("right-hand side size mismatch");
  Eigen::LLT<Eigen::MatrixXcd> llt(gram.entries());
  if (llt.info() != Eigen::Success) throw IllConditionedError("Cholesky factorization failed");
  const Eigen::MatrixXcd& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double pivot = std::norm(l(i, i));
    if (pivot < kMinPivot) {
      throw IllConditionedError("Cholesky pivot " + std::to_string(pivot) + " at row " + std::to_string(i));
    }
  }
  const Eigen::Map<const Eigen::VectorXcd> b(rhs.data(), n);
  Eigen::VectorXcd c = llt.solve(b);
  Eigen::VectorXcd r = b - gram.entries() * c;
  const double b_norm = b.norm();
  if (r.norm() > kSolveResidual * b_norm) {
    c += llt.solve(r);
    r = b - gram.entries() * c;
    if (r.norm() > kSolveResidual * b_norm) {
      throw IllConditionedError("Gram solve residual " + std::to_string(r.norm() / b_norm) + " above 1e-10");
    }
  }
  return ComplexVector(c.data(), c.data() + n);
}

}  // namespace dirichlet_rkhs
