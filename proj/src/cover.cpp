#include "zforce/cover.hpp"

#include <deque>

#include "max_degree_heap.hpp"
#include "subsets.hpp"

namespace zforce {

CoverResult lm_vertex_cover(const Graph& g) {
  Graph work(g);
  detail::MaxDegreeHeap heap(work);
  CoverResult result;

  VertexSet initial = leaves(work);
  std::deque<Vertex> queue(initial.begin(), initial.end());

  // Adds v to the cover, removes it, and queues neighbours it leaves as leaves.
  auto take = [&](Vertex v) {
    result.cover.push_back(v);
    auto nb = work.neighbours(v);
    VertexSet former(nb.begin(), nb.end());
    work.remove_vertex(v);
    for (Vertex u : former) {
      heap.push(work.degree(u), u);
      if (work.degree(u) == 1) queue.push_back(u);
    }
  };

  while (work.edge_count() > 0) {
    if (!queue.empty()) {
      Vertex leaf = queue.front();
      queue.pop_front();
      if (!work.contains(leaf) || work.degree(leaf) != 1) continue;
      Vertex neighbour = work.neighbours(leaf)[0];
      work.remove_vertex(leaf);
      take(neighbour);
      continue;
    }
    Vertex v = heap.pop_max(work);
    ++result.delta_v;
    take(v);
  }
  result.v_lm = result.cover.size();
  return result;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.capacity(), 0);
  for (Vertex v : s) {
    if (v < in.size()) in[v] = 1;
  }
  for (auto [u, v] : g.edges()) {
    if (!in[u] && !in[v]) return false;
  }
  return true;
}

ExactResult exact_vertex_cover(const Graph& g, std::size_t cap) {
  detail::DenseGraph dense(g, cap, "exact_vertex_cover");
  const std::size_t n = dense.size();
  auto covers = [&](std::uint32_t mask) {
    for (std::size_t v = 0; v < n; ++v) {
      if (mask & (1u << v)) continue;
      // every neighbour of an uncovered vertex must be in the cover
      if ((dense.adj[v] & ~mask) != 0) return false;
    }
    return true;
  };
  for (std::size_t k = 0; k <= n; ++k) {
    std::uint32_t found = 0;
    if (detail::for_each_subset(n, k, [&](std::uint32_t mask) {
          if (!covers(mask)) return false;
          found = mask;
          return true;
        })) {
      return ExactResult{k, dense.decode(found)};
    }
  }
  return ExactResult{};
}

}  // namespace zforce
