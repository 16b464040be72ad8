#include "zforce/metrics.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_min.h>
#include <gsl/gsl_sf_zeta.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "zforce/errors.hpp"

namespace zforce {

double DegreeStats::p(std::size_t k) const {
  auto it = histogram.find(k);
  if (it == histogram.end() || n == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(n);
}

DegreeStats degree_distribution(const Graph& g) {
  if (g.empty()) throw InvalidArgument("degree_distribution: empty graph");
  DegreeStats stats;
  for (Vertex v : g.vertices()) ++stats.histogram[g.degree(v)];
  stats.n = g.alive_count();
  return stats;
}

DegreeStats degree_stats_from_samples(std::span<const std::size_t> samples) {
  DegreeStats stats;
  for (std::size_t k : samples) ++stats.histogram[k];
  stats.n = samples.size();
  return stats;
}

namespace {

struct TailSums {
  double n_tail;
  double sum_log_k;
  std::size_t k_min;
};

double negative_log_likelihood(double gamma, void* params) {
  const auto* t = static_cast<const TailSums*>(params);
  gsl_sf_result zeta;
  if (gsl_sf_hzeta_e(gamma, static_cast<double>(t->k_min), &zeta) != GSL_SUCCESS) {
    return std::numeric_limits<double>::max();
  }
  return gamma * t->sum_log_k + t->n_tail * std::log(zeta.val);
}

struct MinimizerDeleter {
  void operator()(gsl_min_fminimizer* m) const { gsl_min_fminimizer_free(m); }
};

}  // namespace

GammaEstimate estimate_gamma(const DegreeStats& stats, std::size_t k_min) {
  if (k_min == 0) throw InvalidArgument("estimate_gamma: k_min must be at least 1");
  TailSums tail{0.0, 0.0, k_min};
  std::size_t distinct = 0;
  for (auto [k, count] : stats.histogram) {
    if (k < k_min || count == 0) continue;
    tail.n_tail += static_cast<double>(count);
    tail.sum_log_k += static_cast<double>(count) * std::log(static_cast<double>(k));
    ++distinct;
  }
  const auto n_tail = static_cast<std::size_t>(tail.n_tail);
  if (n_tail < kMinTailSamples) {
    throw InvalidArgument("estimate_gamma: only " + std::to_string(n_tail) +
                          " degrees at or above k_min");
  }
  if (distinct < 2) throw InvalidArgument("estimate_gamma: tail has no degree variation");

  gsl_set_error_handler_off();
  gsl_function fn{&negative_log_likelihood, &tail};

  // Bracket the minimum on a grid; the likelihood is unimodal in gamma.
  constexpr double kLo = 1.0005;
  constexpr double kHi = 12.0;
  constexpr int kGrid = 400;
  double best_x = kLo;
  double best_f = std::numeric_limits<double>::max();
  for (int i = 0; i <= kGrid; ++i) {
    double x = kLo + (kHi - kLo) * i / kGrid;
    double f = negative_log_likelihood(x, &tail);
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
  }
  const double step = (kHi - kLo) / kGrid;
  double lower = std::max(kLo, best_x - step);
  double upper = std::min(kHi, best_x + step);
  double gamma = best_x;
  if (best_x > lower && best_x < upper) {
    std::unique_ptr<gsl_min_fminimizer, MinimizerDeleter> minimizer(
        gsl_min_fminimizer_alloc(gsl_min_fminimizer_brent));
    if (gsl_min_fminimizer_set(minimizer.get(), &fn, best_x, lower, upper) == GSL_SUCCESS) {
      for (int iter = 0; iter < 200; ++iter) {
        if (gsl_min_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) break;
        lower = gsl_min_fminimizer_x_lower(minimizer.get());
        upper = gsl_min_fminimizer_x_upper(minimizer.get());
        if (gsl_min_test_interval(lower, upper, 1e-10, 0.0) == GSL_SUCCESS) break;
      }
      gamma = gsl_min_fminimizer_x_minimum(minimizer.get());
    }
  }
  return GammaEstimate{gamma, (gamma - 1.0) / std::sqrt(tail.n_tail), n_tail};
}

DiameterResult diameter(const Graph& g, DiameterMethod method) {
  if (g.empty()) throw InvalidArgument("diameter: empty graph");
  auto components = connected_components(g);
  const VertexSet* largest = &components.front();
  for (const auto& c : components) {
    if (c.size() > largest->size()) largest = &c;
  }
  DiameterResult out{0, components.size(), largest->size()};

  auto farthest = [&](Vertex source) {
    auto dist = bfs_distances(g, source);
    Vertex best = source;
    for (Vertex v : *largest) {
      if (dist[v] > dist[best]) best = v;
    }
    return std::pair{best, dist[best]};
  };

  if (method == DiameterMethod::two_sweep) {
    auto [far, unused] = farthest(largest->front());
    (void)unused;
    out.diameter = farthest(far).second;
    return out;
  }
  for (Vertex v : *largest) out.diameter = std::max(out.diameter, eccentricity(g, v));
  return out;
}

ScalingFit fit_scaling(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw InvalidArgument("fit_scaling: need at least 3 points");
  const double n = static_cast<double>(points.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (auto [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (auto [x, y] : points) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
    syy += (y - mean_y) * (y - mean_y);
  }
  double scale = 0.0;
  for (auto [x, y] : points) scale = std::max(scale, std::abs(x));
  if (sxx <= 1e-24 * std::max(1.0, scale * scale)) {
    throw InvalidArgument("fit_scaling: abscissae do not vary");
  }
  ScalingFit fit;
  fit.points = points.size();
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ss_res = 0.0;
  for (auto [x, y] : points) {
    double r = y - (fit.slope * x + fit.intercept);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return fit;
}

}  // namespace zforce
