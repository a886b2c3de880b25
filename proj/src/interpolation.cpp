#include "dirichlet_rkhs/interpolation.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "dirichlet_rkhs/errors.h"
#include "dirichlet_rkhs/special_functions.h"

namespace dirichlet_rkhs {

namespace {

constexpr double kClearance = 1e-8;
constexpr double kMinPartial = 1e-12;
constexpr std::size_t kMaxExpansionTerms = 1000000;

const std::vector<long>& small_primes() {
  static const std::vector<long> primes = [] {
    std::vector<bool> composite(kPrimeSearchLimit + 1, false);
    std::vector<long> out;
    for (long i = 2; i <= kPrimeSearchLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (long j = i * i; j <= kPrimeSearchLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Distance from `delta` to the lattice {2 pi i k / log p : k in Z}.
double lattice_distance(Complex delta, double log_p) {
  const double period = 2.0 * kPi / log_p;
  const double k = std::round(delta.imag() / period);
  return std::abs(delta - Complex(0.0, k * period));
}

void check_targets(const PointSequence& nodes, const ComplexVector& targets) {
  if (nodes.size() != targets.size()) {
    throw SizeError("got " + std::to_string(targets.size()) + " targets for " +
                    std::to_string(nodes.size()) + " nodes");
  }
  if (nodes.empty()) throw SizeError("interpolation needs at least one node");
}

}  // namespace

DirichletBlaschke::DirichletBlaschke(PointSequence nodes, std::vector<long> primes)
    : nodes_(std::move(nodes)), primes_(std::move(primes)) {
  if (nodes_.size() != primes_.size()) throw SizeError("one prime per node is required");
  for (long p : primes_) {
    if (p < 2) throw DomainError("Blaschke factor base must be at least 2");
    log_primes_.push_back(std::log(static_cast<double>(p)));
  }
}

Complex DirichletBlaschke::factor(std::size_t j, Complex s) const {
  return -expm1((nodes_[j].value() - s) * log_primes_[j]);
}

Complex DirichletBlaschke::operator()(Complex s) const {
  Complex prod = 1.0;
  for (std::size_t j = 0; j < primes_.size(); ++j) prod *= factor(j, s);
  return prod;
}

Complex DirichletBlaschke::partial(std::size_t j, Complex s) const {
  Complex prod = 1.0;
  for (std::size_t l = 0; l < primes_.size(); ++l) {
    if (l != j) prod *= factor(l, s);
  }
  return prod;
}

Complex DirichletBlaschke::derivative_at_node(std::size_t j) const {
  return partial(j, nodes_[j].value()) * log_primes_[j];
}

std::vector<long> select_primes(const PointSequence& nodes) {
  if (nodes.size() > kMaxBlaschkeNodes) {
    throw SizeError("Blaschke construction is capped at " + std::to_string(kMaxBlaschkeNodes) + " nodes");
  }
  std::vector<long> chosen;
  chosen.reserve(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    bool found = false;
    for (long p : small_primes()) {
      const double log_p = std::log(static_cast<double>(p));
      bool clear = true;
      for (std::size_t l = 0; l < nodes.size() && clear; ++l) {
        if (l != j && lattice_distance(nodes[l].value() - nodes[j].value(), log_p) < kClearance) clear = false;
      }
      if (clear) {
        chosen.push_back(p);
        found = true;
        break;
      }
    }
    if (!found) {
      throw ExhaustionError("no prime below " + std::to_string(kPrimeSearchLimit) + " clears node " +
                            std::to_string(j));
    }
  }
  return chosen;
}

DirichletBlaschke make_blaschke(const PointSequence& nodes) {
  return DirichletBlaschke(nodes, select_primes(nodes));
}

Interpolant::Interpolant(SpaceId space, PointSequence nodes, ComplexVector targets, ComplexVector coefficients,
                         InterpolantKind kind, std::optional<DirichletBlaschke> blaschke, EvalConfig cfg)
    : space_(std::move(space)),
      nodes_(std::move(nodes)),
      targets_(std::move(targets)),
      coefficients_(std::move(coefficients)),
      kind_(kind),
      blaschke_(std::move(blaschke)),
      cfg_(cfg) {
  check_targets(nodes_, targets_);
  if (coefficients_.size() != nodes_.size()) throw SizeError("one coefficient per node is required");
  if (kind_ == InterpolantKind::BlaschkeLagrange && !blaschke_) {
    throw DomainError("Blaschke-Lagrange interpolant needs its product");
  }
  residuals_.reserve(nodes_.size());
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    residuals_.push_back(std::abs((*this)(nodes_[j].value()) - targets_[j]));
  }
}

Complex Interpolant::operator()(Complex s) const {
  Complex sum = 0.0;
  if (kind_ == InterpolantKind::BlaschkeLagrange) {
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
      if (coefficients_[j] != Complex(0.0)) sum += coefficients_[j] * blaschke_->partial(j, s);
    }
    return sum;
  }
  const HalfPlanePoint at(s);
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (coefficients_[j] != Complex(0.0)) sum += coefficients_[j] * kernel_value(space_, nodes_[j], at, cfg_);
  }
  return sum;
}

double Interpolant::max_node_residual() const {
  double worst = 0.0;
  for (double r : residuals_) worst = std::max(worst, r);
  return worst;
}

Interpolant finite_interpolant(const PointSequence& nodes, const ComplexVector& targets, const EvalConfig& cfg) {
  check_targets(nodes, targets);
  DirichletBlaschke b = make_blaschke(nodes);
  ComplexVector coeffs(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const Complex at_node = b.partial(j, nodes[j].value());
    if (std::abs(at_node) < kMinPartial) {
      throw NumericalError("|B_j(s_j)| below 1e-12 at node " + std::to_string(j));
    }
    coeffs[j] = targets[j] / at_node;
  }
  const SpaceId space = SpaceId::hardy_dirichlet();
  Interpolant f(space, nodes, targets, std::move(coeffs), InterpolantKind::BlaschkeLagrange, std::move(b), cfg);
  const std::vector<double> norms = kernel_norms(space, nodes, cfg);
  double weighted = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) weighted += std::norm(targets[j]) / (norms[j] * norms[j]);
  f.set_weighted_target_norm(std::sqrt(weighted));
  try {
    double norm2 = 0.0;
    for (const auto& term : dirichlet_expansion(f)) norm2 += std::norm(term.second);
    f.set_norm(std::sqrt(norm2));
  } catch (const SizeError&) {
    // expansion too large; the norm stays unreported
  }
  return f;
}

Interpolant min_norm_interpolant(const SpaceId& space, const PointSequence& nodes, const ComplexVector& targets,
                                 const EvalConfig& cfg) {
  check_targets(nodes, targets);
  const GramMatrix gram = gram_matrix(space, nodes, cfg);
  const std::vector<double> norms = kernel_norms(space, nodes, cfg);
  // K = D G D with D = diag(|k_j|): solve G y = D^{-1} a, then c = D^{-1} y.
  ComplexVector scaled(nodes.size());
  double weighted = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    scaled[j] = targets[j] / norms[j];
    weighted += std::norm(scaled[j]);
  }
  ComplexVector coeffs(nodes.size(), 0.0);
  if (weighted > 0.0) {
    coeffs = solve_hermitian_pd(gram, scaled);
    for (std::size_t j = 0; j < nodes.size(); ++j) coeffs[j] /= norms[j];
  }
  Complex energy = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) energy += std::conj(targets[j]) * coeffs[j];
  Interpolant f(space, nodes, targets, std::move(coeffs), InterpolantKind::KernelCombination, std::nullopt, cfg);
  f.set_norm(std::sqrt(std::max(0.0, energy.real())));
  f.set_weighted_target_norm(std::sqrt(weighted));
  return f;
}

std::vector<std::pair<std::uint64_t, Complex>> dirichlet_expansion(const Interpolant& f, std::uint64_t max_index) {
  if (f.kind() != InterpolantKind::BlaschkeLagrange) {
    throw DomainError("only Blaschke-Lagrange interpolants expand to Dirichlet polynomials");
  }
  const DirichletBlaschke& b = *f.blaschke();
  std::map<std::uint64_t, Complex> total;
  for (std::size_t j = 0; j < b.nodes().size(); ++j) {
    if (f.coefficients()[j] == Complex(0.0)) continue;
    std::map<std::uint64_t, Complex> partial{{1, f.coefficients()[j]}};
    for (std::size_t l = 0; l < b.nodes().size(); ++l) {
      if (l == j) continue;
      // (1 - p^{s_l} p^{-s}): shift every index by p with coefficient -p^{s_l}.
      const auto p = static_cast<std::uint64_t>(b.primes()[l]);
      const Complex shift = -std::exp(b.nodes()[l].value() * std::log(static_cast<double>(p)));
      std::map<std::uint64_t, Complex> next = partial;
      for (const auto& [n, a] : partial) {
        if (n > max_index / p) throw SizeError("Dirichlet expansion index exceeds limit");
        next[n * p] += a * shift;
      }
      if (next.size() > kMaxExpansionTerms) throw SizeError("Dirichlet expansion has too many terms");
      partial.swap(next);
    }
    for (const auto& [n, a] : partial) total[n] += a;
  }
  std::vector<std::pair<std::uint64_t, Complex>> out;
  for (const auto& [n, a] : total) {
    if (a != Complex(0.0)) out.emplace_back(n, a);
  }
  return out;
}

}  // namespace dirichlet_rkhs
