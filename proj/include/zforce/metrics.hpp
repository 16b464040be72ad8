#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "zforce/graph.hpp"

namespace zforce {

struct DegreeStats {
  std::map<std::size_t, std::size_t> histogram;  // degree -> vertex count
  std::size_t n = 0;

  double p(std::size_t k) const;
};

DegreeStats degree_distribution(const Graph& g);

/// Histogram from raw samples; used for synthetic degree sequences.
DegreeStats degree_stats_from_samples(std::span<const std::size_t> samples);

struct GammaEstimate {
  double gamma = 0.0;
  double std_error = 0.0;  // (gamma - 1) / sqrt(n_tail)
  std::size_t n_tail = 0;
};

/// Tail samples needed before estimate_gamma will run.
inline constexpr std::size_t kMinTailSamples = 50;

/**
 * Discrete power-law MLE over degrees >= k_min:
 *   maximise  -gamma * sum(ln k_i) - n_tail * ln zeta(gamma, k_min)
 * with zeta the Hurwitz zeta function. Throws InvalidArgument when fewer
 * than kMinTailSamples degrees reach k_min, when k_min is zero, or when
 * every tail degree equals k_min.
 */
GammaEstimate estimate_gamma(const DegreeStats& stats, std::size_t k_min);

enum class DiameterMethod { exact, two_sweep };

struct DiameterResult {
  std::size_t diameter = 0;
  std::size_t components = 0;
  std::size_t largest_component = 0;
};

/**
 * Diameter of the largest component (lowest smallest-id on size ties).
 * exact: maximum eccentricity over the component, O(N * E).
 * two_sweep: BFS from the component's first vertex, then from the farthest
 * vertex found; a lower bound that is exact on trees.
 */
DiameterResult diameter(const Graph& g, DiameterMethod method);

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Ordinary least squares y = slope * x + intercept; needs >= 3 points and varying x.
ScalingFit fit_scaling(std::span<const std::pair<double, double>> points);

}  // namespace zforce
