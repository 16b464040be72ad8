#include "zforce/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "zforce/errors.hpp"

namespace zforce {

Graph::Graph(std::size_t n) : adjacency_(n), removed_(n, false), alive_(n) {
  if (n > kMaxVertices) {
    throw InvalidArgument("graph size " + std::to_string(n) + " exceeds the supported maximum");
  }
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u == v) throw InvalidArgument("self-loop on vertex " + std::to_string(u));
    if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice += list.size();
  }
  g.edges_ = twice / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

void Graph::require_alive(Vertex v, const char* what) const {
  if (!contains(v)) {
    throw InvalidArgument(std::string(what) + ": vertex " + std::to_string(v) +
                          " is not an alive vertex");
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  require_alive(u, "add_edge");
  require_alive(v, "add_edge");
  if (u == v) throw InvalidArgument("add_edge: self-loop on vertex " + std::to_string(u));
  auto& au = adjacency_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return;
  au.insert(it, v);
  auto& av = adjacency_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edges_;
}

void Graph::remove_vertex(Vertex v) {
  require_alive(v, "remove_vertex");
  for (Vertex u : adjacency_[v]) {
    auto& au = adjacency_[u];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
  }
  edges_ -= adjacency_[v].size();
  adjacency_[v].clear();
  adjacency_[v].shrink_to_fit();
  removed_[v] = true;
  --alive_;
}

VertexSet Graph::vertices() const {
  VertexSet out;
  out.reserve(alive_);
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    if (!removed_[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.capacity(); ++v) {
    if (g.contains(v) && g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

ChainProbe chain_probe(const Graph& g, Vertex leaf) {
  if (!g.contains(leaf) || g.degree(leaf) != 1) {
    throw InvalidArgument("chain_probe: vertex " + std::to_string(leaf) + " is not a leaf");
  }
  Vertex prev = leaf;
  Vertex cur = g.neighbours(leaf)[0];
  std::size_t length = 1;
  while (g.degree(cur) == 2) {
    auto nb = g.neighbours(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    ++length;
  }
  return ChainProbe{g.degree(cur) == 1, cur, length};
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.capacity(), kUnreached);
  if (!g.contains(source)) throw InvalidArgument("bfs: source vertex is not alive");
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbours(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t eccentricity(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw InvalidArgument("eccentricity: vertex is not alive");
  std::size_t best = 0;
  for (std::size_t d : bfs_distances(g, v)) {
    if (d != std::numeric_limits<std::size_t>::max()) best = std::max(best, d);
  }
  return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.capacity(), false);
  for (Vertex s = 0; s < g.capacity(); ++s) {
    if (!g.contains(s) || seen[s]) continue;
    VertexSet comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbours(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace zforce
