#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zforce/graph.hpp"
#include "zforce/random.hpp"

namespace zforce {

/// Preferential attachment with initial attractiveness; degree exponent 2 + a.
struct PaParams {
  std::size_t n = 0;
  std::size_t m = 1;
  double a = 1.0;
};

/// Deactivation (active-set) growth model; degree exponent 2 + a.
struct DeactParams {
  std::size_t n = 0;
  std::size_t m = 1;
  double a = 1.0;
};

enum class StarArrangement { isolated, string };

/// Star families described by per-hub leaf counts.
struct StarSpec {
  std::vector<std::size_t> hub_degrees;
  StarArrangement arrangement = StarArrangement::isolated;
};

/// Exact rational in lowest terms with positive denominator.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend Fraction operator-(const Fraction& x, const Fraction& y);
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

void validate(const PaParams& p);
void validate(const DeactParams& p);
void validate(const StarSpec& spec);

Graph gen_pa(const PaParams& p, Seed seed);
Graph gen_deactivation(const DeactParams& p, Seed seed);
Graph gen_stars(const StarSpec& spec);
Graph gen_uniform(std::size_t n, double edge_prob, Seed seed);

/// Uniformly random labelled tree (Prüfer sequence); used for forest tests.
Graph gen_random_tree(std::size_t n, Seed seed);

/// True when some hub carries a single leaf, i.e. the "star" is just P2.
bool has_degenerate_star(const StarSpec& spec);

/**
 * Deactivation probabilities for an active set, proportional to
 * 1 / ((a-1)m + k_i) and normalised to sum to one.
 */
std::vector<double> deactivation_probabilities(std::span<const std::size_t> active_degrees,
                                               double a, std::size_t m);

/// Z/N for isolated stars: sum over k > 1 of p_k (k - 1), from the exact census.
Fraction analytic_z_isolated_stars(const StarSpec& spec);

struct StringStarsPrediction {
  Fraction bulk;                 // p_1: every hub carries two chain links
  Fraction census;               // sum over k > 1 of p_k (k - 2) on the finite graph
  Fraction boundary_correction;  // census - bulk; -2/N since the end hubs have one link
};

StringStarsPrediction analytic_z_string_stars(const StarSpec& spec);

}  // namespace zforce
