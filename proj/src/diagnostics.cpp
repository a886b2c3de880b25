#include "dirichlet_rkhs/diagnostics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dirichlet_rkhs/errors.h"
#include "dirichlet_rkhs/parallel.h"
#include "dirichlet_rkhs/special_functions.h"

namespace dirichlet_rkhs {

namespace {

constexpr std::size_t kEquivalenceCap = 128;
constexpr double kEquivalenceMaxT = 40.0;
constexpr double kEquivalenceMaxSigma = 4.0;
constexpr double kProbeMaxT = 1e5;
constexpr std::size_t kProbeBlock = 2048;
constexpr double kProbeRefineMargin = 0.02;

}  // namespace

double separation_constant(const PointSequence& sequence) {
  if (sequence.size() < 2) throw SizeError("separation needs at least two points");
  double best = 1.0;
  for (std::size_t j = 0; j < sequence.size(); ++j) {
    for (std::size_t k = j + 1; k < sequence.size(); ++k) {
      best = std::min(best, pseudohyperbolic_distance(sequence[j], sequence[k]));
    }
  }
  return best;
}

std::vector<CarlesonBox> carleson_boxes(const PointSequence& sequence) {
  if (sequence.empty()) return {};
  double t_min = sequence[0].t();
  double t_max = sequence[0].t();
  double height = 0.0;
  for (const auto& p : sequence) {
    t_min = std::min(t_min, p.t());
    t_max = std::max(t_max, p.t());
    height = std::max(height, p.sigma() - 0.5);
  }
  const double cap = 2.0 * std::max(height, t_max - t_min);
  std::vector<CarlesonBox> boxes;
  for (const auto& p : sequence) {
    double ell = 2.0 * (p.sigma() - 0.5);
    boxes.push_back({p.t(), ell});
    for (int m = 1; m <= 200; ++m) {
      ell *= 2.0;
      if (ell > cap) break;
      boxes.push_back({p.t(), ell});
    }
  }
  return boxes;
}

double carleson_intensity(const PointSequence& sequence, const std::vector<CarlesonBox>& boxes) {
  double best = 0.0;
  for (const auto& box : boxes) {
    double mass = 0.0;
    for (const auto& p : sequence) {
      const double height = p.sigma() - 0.5;
      if (height <= box.ell && std::abs(p.t() - box.t_center) <= 0.5 * box.ell) mass += height;
    }
    best = std::max(best, mass / box.ell);
  }
  return best;
}

double carleson_intensity(const PointSequence& sequence) {
  return carleson_intensity(sequence, carleson_boxes(sequence));
}

double blaschke_sum(const PointSequence& sequence) {
  double sum = 0.0;
  for (const auto& p : sequence) sum += p.sigma() - 0.5;
  return sum;
}

double boas_bound(const SpaceId& space, const PointSequence& sequence, const EvalConfig& cfg) {
  return std::sqrt(std::max(0.0, smallest_eigenvalue(gram_matrix(space, sequence, cfg))));
}

ShapiroShieldsResult shapiro_shields_test(const PointSequence& sequence, double delta_min, double carleson_max,
                                          const EvalConfig& cfg) {
  if (!(delta_min > 0.0) || !(carleson_max > 0.0)) {
    throw DomainError("Shapiro-Shields thresholds must be positive");
  }
  SequenceReport report;
  report.separation = sequence.size() < 2 ? 1.0 : separation_constant(sequence);
  report.carleson = carleson_intensity(sequence);
  report.blaschke_sum = blaschke_sum(sequence);
  const SpaceId h2 = SpaceId::hardy_half_plane();
  if (!sequence.empty()) report.boas.push_back({h2.label(), boas_bound(h2, sequence, cfg)});
  report.verdict_h2 = report.separation >= delta_min && report.carleson <= carleson_max;
  return {report.verdict_h2, report};
}

std::vector<std::vector<std::size_t>> gershgorin_split_indices(const SpaceId& space, const PointSequence& sequence,
                                                               double m_target, const EvalConfig& cfg) {
  if (!(m_target > 0.0 && m_target < 1.0)) throw DomainError("m_target must lie in (0, 1)");
  if (sequence.empty()) return {};
  const GramMatrix gram = gram_matrix(space, sequence, cfg);
  const double budget = 1.0 - m_target;

  std::vector<std::size_t> order(sequence.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sequence[a].sigma() > sequence[b].sigma(); });

  std::vector<std::vector<std::size_t>> parts;
  std::vector<double> row_mass(sequence.size(), 0.0);
  for (std::size_t p : order) {
    bool placed = false;
    for (auto& part : parts) {
      double own = 0.0;
      bool ok = true;
      for (std::size_t q : part) {
        const double g = std::abs(gram(p, q));
        own += g;
        if (row_mass[q] + g > budget) {
          ok = false;
          break;
        }
      }
      if (!ok || own > budget) continue;
      for (std::size_t q : part) row_mass[q] += std::abs(gram(p, q));
      row_mass[p] = own;
      part.push_back(p);
      placed = true;
      break;
    }
    if (!placed) parts.push_back({p});
  }
  return parts;
}

std::vector<PointSequence> gershgorin_split(const SpaceId& space, const PointSequence& sequence, double m_target,
                                            const EvalConfig& cfg) {
  std::vector<PointSequence> out;
  for (const auto& part : gershgorin_split_indices(space, sequence, m_target, cfg)) {
    std::vector<HalfPlanePoint> pts;
    for (std::size_t i : part) pts.push_back(sequence[i]);
    out.emplace_back(std::move(pts));
  }
  return out;
}

EquivalenceReport space_equivalence_report(const PointSequence& sequence, std::optional<double> alpha,
                                           const EvalConfig& cfg) {
  if (sequence.empty()) throw SizeError("equivalence report needs at least one point");
  if (sequence.size() > kEquivalenceCap) throw SizeError("equivalence report is capped at 128 points");
  if (sequence.max_abs_t() > kEquivalenceMaxT || sequence.max_sigma() > kEquivalenceMaxSigma) {
    throw DomainError("equivalence report requires |t| <= 40 and sigma <= 4");
  }
  const bool classical = !alpha || *alpha == 0.0;
  const SpaceId dirichlet = classical ? SpaceId::hardy_dirichlet() : SpaceId::weighted_dirichlet(*alpha);
  const SpaceId half_plane = classical ? SpaceId::hardy_half_plane() : SpaceId::bergman_dirichlet(*alpha);
  const double m_d = boas_bound(dirichlet, sequence, cfg);
  const double m_h = boas_bound(half_plane, sequence, cfg);
  return EquivalenceReport{dirichlet,
                           half_plane,
                           m_d,
                           m_h,
                           m_h > 0.0 ? m_d / m_h : std::numeric_limits<double>::infinity(),
                           sequence.size() < 2 ? 1.0 : separation_constant(sequence),
                           carleson_intensity(sequence),
                           blaschke_sum(sequence)};
}

double kernel_correlation(const SpaceId& space, const HalfPlanePoint& s, double tau, const EvalConfig& cfg) {
  const HalfPlanePoint shifted(s.sigma(), s.t() + tau);
  // |k_{s + i tau}| = |k_s|: the diagonal depends on sigma only.
  const double norm = kernel_norm(space, s, cfg);
  return std::abs(kernel_value(space, s, shifted, cfg)) / (norm * norm);
}

std::optional<ProbeResult> almost_periodicity_probe(const SpaceId& space, const HalfPlanePoint& s, double t_max,
                                                    double target_corr, const EvalConfig& cfg) {
  if (!space.is_dirichlet_series_space()) throw DomainError("probe requires the space H or H_alpha");
  if (!(t_max > 1.0) || t_max > kProbeMaxT) throw DomainError("probe requires 1 < t_max <= 1e5");

  const double norm = kernel_norm(space, s, cfg);
  auto corr = [&](double tau) {
    const HalfPlanePoint shifted(s.sigma(), s.t() + tau);
    return std::abs(kernel_value(space, s, shifted, cfg)) / (norm * norm);
  };
  const long q_max = zeta_truncation_length(Complex(2.0 * s.sigma(), t_max), cfg);
  const double step = 2.0 * kPi / (20.0 * std::log(static_cast<double>(std::max<long>(q_max, 3))));
  const auto count = static_cast<std::size_t>(std::ceil((t_max - 1.0) / step));
  auto tau_at = [&](std::size_t i) { return std::min(t_max, 1.0 + step * static_cast<double>(i)); };

  auto refine = [&](double lo, double hi) {
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - ratio * (b - a), x2 = a + ratio * (b - a);
    double f1 = corr(x1), f2 = corr(x2);
    for (int it = 0; it < 60 && b - a > 1e-10; ++it) {
      if (f1 < f2) {
        a = x1; x1 = x2; f1 = f2;
        x2 = a + ratio * (b - a); f2 = corr(x2);
      } else {
        b = x2; x2 = x1; f2 = f1;
        x1 = b - ratio * (b - a); f1 = corr(x1);
      }
    }
    return f1 > f2 ? ProbeResult{x1, f1} : ProbeResult{x2, f2};
  };

  // Values at grid indices [0, count]; computed block-wise so that the scan
  // stops at the first qualifying peak.
  std::vector<double> values;
  values.reserve(count + 1);
  for (std::size_t start = 0; start <= count; start += kProbeBlock) {
    const std::size_t stop = std::min(count + 1, start + kProbeBlock);
    std::vector<double> block(stop - start);
    parallel_for(block.size(), [&](std::size_t i) { block[i] = corr(tau_at(start + i)); });
    values.insert(values.end(), block.begin(), block.end());
    // Peaks are decidable for indices with both neighbours present.
    const std::size_t first = start == 0 ? 0 : start - 1;
    const std::size_t last = stop == count + 1 ? stop : stop - 1;
    for (std::size_t i = first; i < last; ++i) {
      const double v = values[i];
      if (v < target_corr - kProbeRefineMargin) continue;
      const double left = i == 0 ? -1.0 : values[i - 1];
      const double right = i + 1 < values.size() ? values[i + 1] : -1.0;
      if (v < left || v < right) continue;
      const double lo = i == 0 ? tau_at(0) : tau_at(i - 1);
      const double hi = i + 1 <= count ? tau_at(i + 1) : tau_at(count);
      ProbeResult best = refine(lo, hi);
      if (v > best.correlation) best = {tau_at(i), v};
      if (best.correlation >= target_corr) return best;
    }
  }
  return std::nullopt;
}

}  // namespace dirichlet_rkhs
