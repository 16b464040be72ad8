#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "zforce/graph.hpp"

namespace zforce {

/// Default vertex cap for the brute-force oracles.
inline constexpr std::size_t kExactCap = 16;

/**
 * Variants of the leaf + maximum-degree (LM) heuristic.
 *
 * strict_literal applies the leaf rules as worded: a white leaf at the end of
 * an isolated chain starts the chain, a black leaf forces its neighbour and
 * is removed (recursively), otherwise the leaves at distance two are coloured
 * black and removed. The hub of a star is left white in that last case.
 *
 * closure_consistent never deletes anything. The forcing rule is run to a
 * fixed point after every action, and the leaf rules are read off the white
 * subgraph (black vertices count as absent). A white leaf on a white path
 * with a white leaf at the other end starts the path. A white leaf whose
 * path ends at a branch vertex v starts the far ends of every other white
 * pendant path at v; if v then still has several white neighbours, the
 * leaf's own path is reserved for v's last force. The maximum-degree step
 * colours the white vertex with the most white neighbours. On forests the
 * result is the exact zero forcing number and the maximum-degree step never
 * runs.
 */
enum class LmMode { closure_consistent, strict_literal };

std::string_view to_string(LmMode mode);
/// Accepts "closure-consistent" and "strict-literal"; throws InvalidArgument otherwise.
LmMode parse_lm_mode(std::string_view text);

enum class LmRule {
  chain_start,    // white end of an isolated chain joins the set
  force,          // a black vertex forced its only white neighbour
  sibling_start,  // a sibling leaf (or pendant-path end) joins the set
  max_degree,     // fallback removal of a maximum-degree vertex
  isolated,       // white isolated vertex joins the set
};

std::string_view to_string(LmRule rule);

struct TraceEvent {
  LmRule rule;
  Vertex vertex;
};

struct ForcingResult {
  VertexSet zfs;                  // in the order vertices were added
  std::size_t z_lm = 0;           // zfs.size()
  std::size_t delta_z = 0;        // vertices added by the maximum-degree step
  std::vector<TraceEvent> trace;  // only filled when requested
};

struct LmOptions {
  LmMode mode = LmMode::closure_consistent;
  bool trace = false;
};

/// Black set (sorted) after applying the forcing rule to a fixed point.
VertexSet closure(const Graph& g, const VertexSet& initial_black);

bool is_forcing_set(const Graph& g, const VertexSet& s);

/// Runs the LM heuristic on a copy of g. The result is always a forcing set of g.
ForcingResult lm_zero_forcing(const Graph& g, LmOptions options = {});

struct ExactResult {
  std::size_t size = 0;
  VertexSet witness;
};

/**
 * Minimum zero forcing set by enumeration: sizes in increasing order,
 * subsets in lexicographic order within a size, first hit wins.
 * Throws InvalidArgument when g has more than `cap` alive vertices.
 */
ExactResult exact_zero_forcing(const Graph& g, std::size_t cap = kExactCap);

/// Lower bound on the minimum rank of a graph with n vertices and forcing number z.
std::size_t minimum_rank_lower_bound(std::size_t n, std::size_t z);

}  // namespace zforce
