#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zforce/errors.hpp"
#include "zforce/graph.hpp"

namespace zforce::detail {

// Alive vertices of a small graph relabelled 0..k-1 with adjacency bitmasks.
struct DenseGraph {
  VertexSet ids;
  std::vector<std::uint32_t> adj;

  explicit DenseGraph(const Graph& g, std::size_t cap, const char* who) : ids(g.vertices()) {
    if (cap > 31) cap = 31;
    if (ids.size() > cap) {
      throw InvalidArgument(std::string(who) + ": graph has " + std::to_string(ids.size()) +
                            " vertices, above the cap of " + std::to_string(cap));
    }
    std::vector<int> index(g.capacity(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
    adj.assign(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (Vertex w : g.neighbours(ids[i])) adj[i] |= 1u << index[w];
    }
  }

  std::size_t size() const { return ids.size(); }

  VertexSet decode(std::uint32_t mask) const {
    VertexSet out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask & (1u << i)) out.push_back(ids[i]);
    }
    return out;
  }
};

// Calls visit(mask) for every k-subset of {0..n-1} in lexicographic order of
// the sorted index tuples, stopping early when visit returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (std::size_t i : idx) mask |= 1u << i;
    if (visit(mask)) return true;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace zforce::detail
