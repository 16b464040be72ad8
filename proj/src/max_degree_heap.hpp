#pragma once

#include <queue>
#include <utility>
#include <vector>

#include "zforce/graph.hpp"

namespace zforce::detail {

// Lazy max-heap over (degree, vertex) for graphs whose degrees only shrink.
// Callers push a fresh entry whenever a degree drops; stale entries are
// discarded on pop. Ties go to the lowest vertex id.
class MaxDegreeHeap {
 public:
  MaxDegreeHeap() = default;
  explicit MaxDegreeHeap(const Graph& g) {
    for (Vertex v : g.vertices()) push(g.degree(v), v);
  }

  void push(std::size_t degree, Vertex v) { heap_.emplace(degree, v); }

  // Current maximum-degree alive vertex; the graph must have an alive vertex.
  Vertex pop_max(const Graph& g) {
    return pop_max([&](Vertex v) { return g.contains(v) && g.degree(v) == top_degree_; });
  }

  // Highest entry accepted by `fresh`; `fresh` sees the entry's degree via
  // top_degree(). Some entry must be fresh.
  template <typename Fresh>
  Vertex pop_max(Fresh fresh) {
    while (true) {
      auto [deg, v] = heap_.top();
      heap_.pop();
      top_degree_ = deg;
      if (fresh(v)) return v;
    }
  }

  std::size_t top_degree() const { return top_degree_; }

 private:
  using Entry = std::pair<std::size_t, Vertex>;
  struct Order {
    bool operator()(const Entry& x, const Entry& y) const {
      if (x.first != y.first) return x.first < y.first;
      return x.second > y.second;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Order> heap_;
  std::size_t top_degree_ = 0;
};

}  // namespace zforce::detail
