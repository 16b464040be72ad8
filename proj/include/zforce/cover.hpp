#pragma once

#include <cstddef>

#include "zforce/forcing.hpp"
#include "zforce/graph.hpp"

namespace zforce {

struct CoverResult {
  VertexSet cover;          // in the order vertices were added
  std::size_t v_lm = 0;     // cover.size()
  std::size_t delta_v = 0;  // vertices added by the maximum-degree step
};

/**
 * Leaf-removal vertex cover with a maximum-degree fallback.
 *
 * Leaves are taken from a FIFO queue: the leaf is dropped, its neighbour is
 * added to the cover and dropped, and neighbours left with degree one join
 * the queue. Entries that are no longer leaves are skipped. With an empty
 * queue, the lowest-id vertex of maximum degree goes into the cover.
 * Isolated vertices are discarded without being covered.
 */
CoverResult lm_vertex_cover(const Graph& g);

bool is_vertex_cover(const Graph& g, const VertexSet& s);

/// Minimum vertex cover by enumeration; throws InvalidArgument above `cap` alive vertices.
ExactResult exact_vertex_cover(const Graph& g, std::size_t cap = kExactCap);

}  // namespace zforce
