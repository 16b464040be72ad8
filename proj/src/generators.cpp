#include "zforce/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "zforce/errors.hpp"

namespace zforce {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Fraction Fraction::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Fraction{num / g, den / g};
}

Fraction operator-(const Fraction& x, const Fraction& y) {
  return Fraction::make(x.num * y.den - y.num * x.den, x.den * y.den);
}

namespace {

void validate_growth(std::size_t n, std::size_t m, double a, const char* model) {
  std::string name(model);
  if (m < 1) throw InvalidArgument(name + ": m must be at least 1");
  if (n < m + 1) throw InvalidArgument(name + ": n must be at least m + 1");
  if (n > kMaxVertices) throw InvalidArgument(name + ": n exceeds the supported maximum");
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument(name + ": a must be positive");
}

void add_seed_clique(EdgeList& edges, std::size_t m) {
  for (Vertex u = 0; u <= m; ++u) {
    for (Vertex v = u + 1; v <= m; ++v) edges.emplace_back(u, v);
  }
}

std::size_t pick_weighted(std::span<const double> weights, double total, Rng& rng) {
  double r = rng.uniform() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (r < weights[i]) return i;
    r -= weights[i];
  }
  return weights.size() - 1;  // rounding left r just past the last bucket
}

}  // namespace

void validate(const PaParams& p) { validate_growth(p.n, p.m, p.a, "gen_pa"); }
void validate(const DeactParams& p) { validate_growth(p.n, p.m, p.a, "gen_deactivation"); }

void validate(const StarSpec& spec) {
  if (spec.hub_degrees.empty()) throw InvalidArgument("star spec has no hubs");
  for (std::size_t leaves : spec.hub_degrees) {
    if (leaves < 1) throw InvalidArgument("every hub needs at least one leaf");
  }
  if (spec.arrangement == StarArrangement::string && spec.hub_degrees.size() < 2) {
    throw InvalidArgument("a string of stars needs at least two hubs");
  }
  std::size_t n = 0;
  for (std::size_t leaves : spec.hub_degrees) n += leaves + 1;
  if (n > kMaxVertices) throw InvalidArgument("star spec exceeds the supported maximum size");
}

bool has_degenerate_star(const StarSpec& spec) {
  return spec.arrangement == StarArrangement::isolated &&
         std::ranges::any_of(spec.hub_degrees, [](std::size_t k) { return k == 1; });
}

Graph gen_pa(const PaParams& p, Seed seed) {
  validate(p);
  Rng rng(seed);
  const std::size_t m = p.m;
  EdgeList edges;
  edges.reserve(m * (m + 1) / 2 + m * (p.n - m - 1));
  add_seed_clique(edges, m);

  // Weight of vertex i is (a-1)m + k_i = (k_i - m) + a m. Every vertex has
  // k_i >= m, so both parts are non-negative: an urn holding one entry per
  // unit of excess degree plus a uniform component of mass a m per vertex.
  std::vector<Vertex> excess_urn;
  excess_urn.reserve(2 * m * p.n);
  const double uniform_mass = p.a * static_cast<double>(m);

  std::vector<Vertex> targets;
  targets.reserve(m);
  for (std::size_t t = m + 1; t < p.n; ++t) {
    const double urn = static_cast<double>(excess_urn.size());
    const double total = urn + uniform_mass * static_cast<double>(t);
    targets.clear();
    while (targets.size() < m) {
      double r = rng.uniform() * total;
      Vertex pick;
      if (r < urn) {
        pick = excess_urn[static_cast<std::size_t>(r)];
      } else {
        auto idx = static_cast<std::size_t>((r - urn) / uniform_mass);
        pick = static_cast<Vertex>(std::min(idx, t - 1));
      }
      if (std::ranges::find(targets, pick) == targets.end()) targets.push_back(pick);
    }
    for (Vertex target : targets) {
      edges.emplace_back(target, static_cast<Vertex>(t));
      excess_urn.push_back(target);
    }
  }
  return Graph::from_edges(p.n, edges);
}

std::vector<double> deactivation_probabilities(std::span<const std::size_t> active_degrees,
                                               double a, std::size_t m) {
  std::vector<double> probs;
  probs.reserve(active_degrees.size());
  const double offset = (a - 1.0) * static_cast<double>(m);
  double total = 0.0;
  for (std::size_t k : active_degrees) {
    double w = 1.0 / (offset + static_cast<double>(k));
    probs.push_back(w);
    total += w;
  }
  for (double& w : probs) w /= total;
  return probs;
}

Graph gen_deactivation(const DeactParams& p, Seed seed) {
  validate(p);
  Rng rng(seed);
  const std::size_t m = p.m;
  const double offset = (p.a - 1.0) * static_cast<double>(m);
  EdgeList edges;
  edges.reserve(m * (m + 1) / 2 + m * (p.n - m - 1));
  add_seed_clique(edges, m);

  std::vector<std::size_t> degree(p.n, 0);
  std::vector<Vertex> active;
  for (Vertex v = 0; v <= m; ++v) {
    degree[v] = m;
    active.push_back(v);
  }

  std::vector<double> weights;
  auto deactivate_one = [&] {
    weights.clear();
    double total = 0.0;
    for (Vertex v : active) {
      double w = 1.0 / (offset + static_cast<double>(degree[v]));
      weights.push_back(w);
      total += w;
    }
    std::size_t victim = pick_weighted(weights, total, rng);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(victim));
  };

  // The seed clique starts with m + 1 active vertices; one is retired before
  // growth so every new vertex meets exactly m active vertices.
  deactivate_one();
  for (std::size_t t = m + 1; t < p.n; ++t) {
    auto v = static_cast<Vertex>(t);
    for (Vertex u : active) {
      edges.emplace_back(u, v);
      ++degree[u];
    }
    degree[v] = m;
    active.push_back(v);
    deactivate_one();
  }
  return Graph::from_edges(p.n, edges);
}

Graph gen_stars(const StarSpec& spec) {
  validate(spec);
  std::size_t n = 0;
  for (std::size_t leaves : spec.hub_degrees) n += leaves + 1;

  EdgeList edges;
  Vertex next = 0;
  std::vector<Vertex> hubs;
  for (std::size_t leaves : spec.hub_degrees) {
    Vertex hub = next++;
    hubs.push_back(hub);
    for (std::size_t i = 0; i < leaves; ++i) edges.emplace_back(hub, next++);
  }
  if (spec.arrangement == StarArrangement::string) {
    for (std::size_t i = 0; i + 1 < hubs.size(); ++i) edges.emplace_back(hubs[i], hubs[i + 1]);
  }
  return Graph::from_edges(n, edges);
}

Graph gen_uniform(std::size_t n, double edge_prob, Seed seed) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw InvalidArgument("gen_uniform: edge probability must lie in [0, 1]");
  }
  Rng rng(seed);
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform() < edge_prob) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_random_tree(std::size_t n, Seed seed) {
  if (n <= 1) return Graph(n);
  if (n == 2) {
    EdgeList e{{0, 1}};
    return Graph::from_edges(2, e);
  }
  Rng rng(seed);
  std::vector<Vertex> prufer(n - 2);
  for (auto& x : prufer) x = static_cast<Vertex>(rng.below(n));

  std::vector<std::size_t> count(n, 1);
  for (Vertex x : prufer) ++count[x];
  EdgeList edges;
  // Straightforward O(n^2) decoding; only used for small test trees.
  for (Vertex x : prufer) {
    Vertex leaf = 0;
    while (count[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --count[leaf];
    --count[x];
  }
  Vertex u = 0;
  while (count[u] != 1) ++u;
  Vertex v = u + 1;
  while (count[v] != 1) ++v;
  edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Fraction analytic_z_isolated_stars(const StarSpec& spec) {
  validate(spec);
  if (spec.arrangement != StarArrangement::isolated) {
    throw InvalidArgument("analytic_z_isolated_stars needs an isolated arrangement");
  }
  std::int64_t n = 0;
  std::int64_t z = 0;
  for (std::size_t leaves : spec.hub_degrees) {
    n += static_cast<std::int64_t>(leaves) + 1;
    // A hub of degree k > 1 contributes k - 1; a one-leaf hub has degree 1.
    if (leaves > 1) z += static_cast<std::int64_t>(leaves) - 1;
  }
  return Fraction::make(z, n);
}

StringStarsPrediction analytic_z_string_stars(const StarSpec& spec) {
  validate(spec);
  if (spec.arrangement != StarArrangement::string) {
    throw InvalidArgument("analytic_z_string_stars needs a string arrangement");
  }
  const std::size_t hubs = spec.hub_degrees.size();
  std::int64_t n = 0;
  std::int64_t leaves = 0;
  std::int64_t census = 0;
  for (std::size_t i = 0; i < hubs; ++i) {
    auto own = static_cast<std::int64_t>(spec.hub_degrees[i]);
    std::int64_t links = (i == 0 || i + 1 == hubs) ? 1 : 2;
    n += own + 1;
    leaves += own;
    std::int64_t k = own + links;
    if (k > 1) census += k - 2;
  }
  StringStarsPrediction out;
  out.bulk = Fraction::make(leaves, n);
  out.census = Fraction::make(census, n);
  out.boundary_correction = out.census - out.bulk;
  return out;
}

}  // namespace zforce
