#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace zforce {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;

/// Upper bound on the number of vertices a Graph may hold.
inline constexpr std::size_t kMaxVertices = 1'000'000;

/**
 * Undirected simple graph over ids 0..capacity()-1.
 *
 * Neighbour lists are kept sorted so every traversal is deterministic.
 * Removing a vertex leaves a tombstone: ids never shift, and the vertex
 * disappears from all adjacency lists.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Build from an edge list in one pass; duplicate edges collapse.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t capacity() const { return adjacency_.size(); }
  std::size_t alive_count() const { return alive_; }
  std::size_t edge_count() const { return edges_; }
  bool empty() const { return alive_ == 0; }

  bool contains(Vertex v) const { return v < adjacency_.size() && !removed_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Throws InvalidArgument on self-loops and dead or out-of-range ids. Repeat adds are no-ops.
  void add_edge(Vertex u, Vertex v);

  /// Throws InvalidArgument if v is not alive.
  void remove_vertex(Vertex v);

  /// Alive vertices in increasing id order.
  VertexSet vertices() const;

  /// Edges (u < v) in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void require_alive(Vertex v, const char* what) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<bool> removed_;
  std::size_t alive_ = 0;
  std::size_t edges_ = 0;
};

/// Alive vertices of degree exactly one.
VertexSet leaves(const Graph& g);

struct ChainProbe {
  bool isolated_chain = false;
  // The leaf at the other end when isolated_chain is set, otherwise the
  // first vertex of degree >= 3 reached by the walk.
  Vertex end = 0;
  // Number of edges walked.
  std::size_t length = 0;
};

/// Walk from a leaf through degree-2 vertices until the walk stops.
ChainProbe chain_probe(const Graph& g, Vertex leaf);

/// Largest BFS distance from v within v's component.
std::size_t eccentricity(const Graph& g, Vertex v);

/// BFS distances from source; unreachable and dead vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Components in order of their smallest vertex; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace zforce
