#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dirichlet_rkhs/gram.h"

namespace dirichlet_rkhs {

// Everything here certifies finite sections only. Verdicts are relative to
// caller-supplied thresholds and say nothing about infinite sequences.

/// Boas bound of one space, keyed by SpaceId::label().
struct SpaceBound {
  std::string space;
  double boas;
};

struct SequenceReport {
  double separation = 1.0;   // min pairwise pseudohyperbolic distance (1 for one point)
  double carleson = 0.0;     // point-anchored dyadic box intensity
  double blaschke_sum = 0.0; // sum (sigma_j - 1/2)
  std::vector<SpaceBound> boas;
  bool verdict_h2 = false;
};

/// min_{j != k} rho(s_j, s_k). SizeError for fewer than two points.
double separation_constant(const PointSequence& sequence);

/// Q = {1/2 < sigma <= 1/2 + ell, |t - t_center| <= ell/2}.
struct CarlesonBox {
  double t_center;
  double ell;
};

/// Boxes anchored at each point with ell = 2(sigma_k - 1/2) 2^m, m = 0, 1, ...,
/// while ell stays below the sequence diameter (m = 0 always included).
std::vector<CarlesonBox> carleson_boxes(const PointSequence& sequence);

/// max over `boxes` of sum_{s_j in Q} (sigma_j - 1/2) / ell(Q).
double carleson_intensity(const PointSequence& sequence, const std::vector<CarlesonBox>& boxes);
double carleson_intensity(const PointSequence& sequence);

double blaschke_sum(const PointSequence& sequence);

/// m = sqrt(max(lambda_min(G), 0)) of the normalized Gram matrix.
double boas_bound(const SpaceId& space, const PointSequence& sequence, const EvalConfig& cfg = {});

struct ShapiroShieldsResult {
  bool verdict;
  SequenceReport report;
};

/// Separation >= delta_min and Carleson intensity <= carleson_max. The
/// report also carries the H^2 Boas bound.
ShapiroShieldsResult shapiro_shields_test(const PointSequence& sequence, double delta_min, double carleson_max,
                                          const EvalConfig& cfg = {});

/// Partition into parts whose normalized Gram matrices have off-diagonal row
/// sums <= 1 - m_target, so that lambda_min >= m_target on each part. Points
/// are visited by decreasing sigma and placed in the first part that stays
/// diagonally dominant. Returned as index lists into `sequence`.
std::vector<std::vector<std::size_t>> gershgorin_split_indices(const SpaceId& space, const PointSequence& sequence,
                                                               double m_target, const EvalConfig& cfg = {});
std::vector<PointSequence> gershgorin_split(const SpaceId& space, const PointSequence& sequence, double m_target,
                                            const EvalConfig& cfg = {});

struct EquivalenceReport {
  SpaceId dirichlet_space;
  SpaceId half_plane_space;
  double m_dirichlet;
  double m_half_plane;
  double ratio;  // m_dirichlet / m_half_plane
  double separation;
  double carleson;
  double blaschke_sum;
};

/// Boas bounds of (H, H^2) when alpha is empty or 0, otherwise of
/// (H_alpha, D_alpha). Requires |t_j| <= 40, sigma_j <= 4 and at most 128 points.
EquivalenceReport space_equivalence_report(const PointSequence& sequence, std::optional<double> alpha,
                                           const EvalConfig& cfg = {});

struct ProbeResult {
  double tau;
  double correlation;
};

/// Searches tau in (1, t_max] for |k_s(s + i tau)| / (|k_s| |k_{s+i tau}|) >= target.
/// The scan step is 2 pi / (20 log q) with q the zeta truncation length at
/// height t_max; grid peaks near the target are refined by golden-section
/// search. Returns the first peak reaching the target, if any.
std::optional<ProbeResult> almost_periodicity_probe(const SpaceId& space, const HalfPlanePoint& s, double t_max,
                                                    double target_corr, const EvalConfig& cfg = {});

/// The correlation the probe maximizes, evaluated directly.
double kernel_correlation(const SpaceId& space, const HalfPlanePoint& s, double tau, const EvalConfig& cfg = {});

}  // namespace dirichlet_rkhs
