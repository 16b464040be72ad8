#include "zforce/forcing.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "max_degree_heap.hpp"
#include "subsets.hpp"
#include "zforce/errors.hpp"

namespace zforce {

std::string_view to_string(LmMode mode) {
  switch (mode) {
    case LmMode::closure_consistent: return "closure-consistent";
    case LmMode::strict_literal: return "strict-literal";
  }
  return "?";
}

LmMode parse_lm_mode(std::string_view text) {
  if (text == "closure-consistent") return LmMode::closure_consistent;
  if (text == "strict-literal") return LmMode::strict_literal;
  throw InvalidArgument("unknown LM mode '" + std::string(text) + "'");
}

std::string_view to_string(LmRule rule) {
  switch (rule) {
    case LmRule::chain_start: return "chain";
    case LmRule::force: return "force";
    case LmRule::sibling_start: return "sibling";
    case LmRule::max_degree: return "max-degree";
    case LmRule::isolated: return "isolated";
  }
  return "?";
}

VertexSet closure(const Graph& g, const VertexSet& initial_black) {
  const std::size_t n = g.capacity();
  std::vector<char> black(n, 0);
  std::vector<std::uint32_t> white(n, 0);
  for (Vertex v : initial_black) {
    if (!g.contains(v)) throw InvalidArgument("closure: initial vertex is not alive");
    black[v] = 1;
  }
  std::vector<Vertex> work;
  for (Vertex v = 0; v < n; ++v) {
    if (!g.contains(v)) continue;
    for (Vertex w : g.neighbours(v)) white[v] += black[w] ? 0 : 1;
    if (black[v]) work.push_back(v);
  }
  while (!work.empty()) {
    Vertex u = work.back();
    work.pop_back();
    if (white[u] != 1) continue;
    auto nb = g.neighbours(u);
    Vertex target = *std::ranges::find_if(nb, [&](Vertex w) { return !black[w]; });
    black[target] = 1;
    work.push_back(target);
    for (Vertex x : g.neighbours(target)) {
      --white[x];
      if (black[x] && white[x] == 1) work.push_back(x);
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (g.contains(v) && black[v]) out.push_back(v);
  }
  return out;
}

bool is_forcing_set(const Graph& g, const VertexSet& s) {
  return closure(g, s).size() == g.alive_count();
}

namespace {

void record(ForcingResult& result, const LmOptions& options, LmRule rule, Vertex v) {
  if (options.trace) result.trace.push_back({rule, v});
}

// Literal reading: a shrinking working graph in which leaves, chains and
// siblings are read off the current degrees, and coloured vertices are
// removed as the rules say.
class LiteralRun {
 public:
  LiteralRun(const Graph& g, LmOptions options)
      : work_(g), options_(options), black_(g.capacity(), 0), heap_(work_) {}

  ForcingResult run() {
    while (!work_.empty()) {
      const std::size_t before = work_.alive_count();
      for (Vertex leaf : leaves(work_)) process_leaf(leaf);
      sweep_isolated();
      if (work_.alive_count() == before && !work_.empty()) {
        remove_max_degree();
        sweep_isolated();
      }
    }
    result_.z_lm = result_.zfs.size();
    return std::move(result_);
  }

 private:
  void start(Vertex v, LmRule rule) {
    black_[v] = 1;
    result_.zfs.push_back(v);
    record(result_, options_, rule, v);
  }

  void remove(Vertex v) {
    auto nb = work_.neighbours(v);
    std::vector<Vertex> former(nb.begin(), nb.end());
    work_.remove_vertex(v);
    for (Vertex u : former) heap_.push(work_.degree(u), u);
  }

  // Black leaf: force the neighbour, remove the leaf, continue while the
  // neighbour is left as a leaf itself.
  void force_along(Vertex leaf) {
    Vertex cur = leaf;
    while (work_.contains(cur) && work_.degree(cur) == 1 && black_[cur]) {
      Vertex next = work_.neighbours(cur)[0];
      if (!black_[next]) {
        black_[next] = 1;
        record(result_, options_, LmRule::force, next);
      }
      remove(cur);
      cur = next;
    }
  }

  void process_leaf(Vertex leaf) {
    if (!work_.contains(leaf) || work_.degree(leaf) != 1) return;
    if (!black_[leaf]) {
      ChainProbe probe = chain_probe(work_, leaf);
      if (probe.isolated_chain && !black_[probe.end]) start(leaf, LmRule::chain_start);
    }
    if (black_[leaf]) {
      force_along(leaf);
      return;
    }
    Vertex hub = work_.neighbours(leaf)[0];
    VertexSet siblings;
    for (Vertex s : work_.neighbours(hub)) {
      if (s != leaf && work_.degree(s) == 1) siblings.push_back(s);
    }
    for (Vertex s : siblings) {
      if (!black_[s]) start(s, LmRule::sibling_start);
      remove(s);
    }
  }

  void sweep_isolated() {
    for (Vertex v = 0; v < work_.capacity(); ++v) {
      if (!work_.contains(v) || work_.degree(v) != 0) continue;
      if (!black_[v]) start(v, LmRule::isolated);
      remove(v);
    }
  }

  void remove_max_degree() {
    Vertex v = heap_.pop_max(work_);
    if (!black_[v]) {
      start(v, LmRule::max_degree);
      ++result_.delta_z;
    } else {
      record(result_, options_, LmRule::max_degree, v);
    }
    remove(v);
  }

  Graph work_;
  LmOptions options_;
  std::vector<char> black_;
  detail::MaxDegreeHeap heap_;
  ForcingResult result_;
};

// Closure-consistent reading. Nothing is deleted: the forcing rule is run to
// a fixed point after every action and the leaf rules look at the white
// subgraph, where a black vertex counts as gone. A black vertex that still
// has several white neighbours waits to force the last one; the pendant
// path that made it black is reserved for that force.
class ClosureRun {
 public:
  ClosureRun(const Graph& g, LmOptions options)
      : g_(g),
        options_(options),
        black_(g.capacity(), 0),
        reserved_(g.capacity(), 0),
        white_nbrs_(g.capacity(), 0),
        scanned_at_(g.capacity(), 0),
        whites_(g.alive_count()) {
    for (Vertex v : g.vertices()) {
      white_nbrs_[v] = static_cast<std::uint32_t>(g.degree(v));
      heap_.push(g.degree(v), v);
    }
  }

  ForcingResult run() {
    while (whites_ > 0) {
      const std::size_t before = whites_;
      ++pass_;
      VertexSet snapshot;
      for (Vertex v = 0; v < g_.capacity(); ++v) {
        if (is_white(v) && white_nbrs_[v] <= 1 && !reserved_[v]) snapshot.push_back(v);
      }
      for (Vertex v : snapshot) process(v);
      if (whites_ == before) colour_max_degree();
    }
    result_.z_lm = result_.zfs.size();
    return std::move(result_);
  }

 private:
  bool is_white(Vertex v) const { return g_.contains(v) && !black_[v]; }

  void colour_black(Vertex v) {
    black_[v] = 1;
    reserved_[v] = 0;
    --whites_;
    for (Vertex u : g_.neighbours(v)) {
      --white_nbrs_[u];
      if (black_[u]) {
        if (white_nbrs_[u] == 1) pending_.push_back(u);
      } else {
        heap_.push(white_nbrs_[u], u);
      }
    }
    if (white_nbrs_[v] == 1) pending_.push_back(v);
  }

  void start(Vertex v, LmRule rule) {
    colour_black(v);
    result_.zfs.push_back(v);
    record(result_, options_, rule, v);
    propagate();
  }

  Vertex white_neighbour_except(Vertex v, Vertex skip) const {
    for (Vertex w : g_.neighbours(v)) {
      if (w != skip && !black_[w]) return w;
    }
    return v;
  }

  void propagate() {
    while (!pending_.empty()) {
      Vertex u = pending_.back();
      pending_.pop_back();
      if (white_nbrs_[u] != 1) continue;
      Vertex target = white_neighbour_except(u, u);
      colour_black(target);
      record(result_, options_, LmRule::force, target);
    }
  }

  // Follow white vertices with two white neighbours, starting at `first`
  // after `from`. Returns the last vertex reached, or `from` on a cycle.
  Vertex walk(Vertex from, Vertex first) const {
    Vertex prev = from;
    Vertex cur = first;
    while (white_nbrs_[cur] == 2) {
      Vertex next = white_neighbour_except(cur, prev);
      if (next == from) return from;
      prev = cur;
      cur = next;
    }
    return cur;
  }

  // Marks the white path component that contains `leaf`.
  void reserve_path(Vertex leaf) {
    Vertex prev = leaf;
    Vertex cur = leaf;
    reserved_[cur] = 1;
    while (true) {
      Vertex next = white_neighbour_except(cur, prev);
      if (next == cur || next == prev) return;
      reserved_[next] = 1;
      prev = cur;
      cur = next;
    }
  }

  void process(Vertex leaf) {
    if (!is_white(leaf) || reserved_[leaf] || white_nbrs_[leaf] > 1) return;
    if (white_nbrs_[leaf] == 0) {
      start(leaf, g_.degree(leaf) == 0 ? LmRule::isolated : LmRule::chain_start);
      return;
    }
    Vertex end = walk(leaf, white_neighbour_except(leaf, leaf));
    if (white_nbrs_[end] == 1) {
      start(leaf, LmRule::chain_start);
      return;
    }
    const Vertex anchor = end;
    if (scanned_at_[anchor] == pass_) return;
    VertexSet others;
    for (Vertex w : g_.neighbours(anchor)) {
      if (black_[w]) continue;
      Vertex far = walk(anchor, w);
      if (far != anchor && white_nbrs_[far] == 1 && far != leaf && !reserved_[far]) {
        others.push_back(far);
      }
    }
    if (others.empty()) {
      scanned_at_[anchor] = pass_;
      return;
    }
    for (Vertex far : others) {
      if (is_white(far)) start(far, LmRule::sibling_start);
    }
    if (is_white(leaf) && black_[anchor]) reserve_path(leaf);
  }

  void colour_max_degree() {
    Vertex v = heap_.pop_max([&](Vertex u) {
      return is_white(u) && white_nbrs_[u] == heap_.top_degree();
    });
    ++result_.delta_z;
    start(v, LmRule::max_degree);
  }

  const Graph& g_;
  LmOptions options_;
  std::vector<char> black_;
  std::vector<char> reserved_;
  std::vector<std::uint32_t> white_nbrs_;
  std::vector<std::size_t> scanned_at_;
  std::size_t whites_;
  std::size_t pass_ = 0;
  std::vector<Vertex> pending_;
  detail::MaxDegreeHeap heap_;
  ForcingResult result_;
};

}  // namespace

ForcingResult lm_zero_forcing(const Graph& g, LmOptions options) {
  if (options.mode == LmMode::strict_literal) return LiteralRun(g, options).run();
  return ClosureRun(g, options).run();
}

ExactResult exact_zero_forcing(const Graph& g, std::size_t cap) {
  detail::DenseGraph dense(g, cap, "exact_zero_forcing");
  const std::size_t n = dense.size();
  const std::uint32_t all = n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1u);

  auto forces_all = [&](std::uint32_t black) {
    bool changed = true;
    while (changed && black != all) {
      changed = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (!(black & (1u << v))) continue;
        std::uint32_t white = dense.adj[v] & ~black;
        if (std::popcount(white) == 1) {
          black |= white;
          changed = true;
        }
      }
    }
    return black == all;
  };

  for (std::size_t k = 0; k <= n; ++k) {
    std::uint32_t found = 0;
    if (detail::for_each_subset(n, k, [&](std::uint32_t mask) {
          if (!forces_all(mask)) return false;
          found = mask;
          return true;
        })) {
      return ExactResult{k, dense.decode(found)};
    }
  }
  return ExactResult{n, dense.decode(all)};
}

std::size_t minimum_rank_lower_bound(std::size_t n, std::size_t z) {
  if (z > n) throw InvalidArgument("minimum_rank_lower_bound: z exceeds n");
  return n - z;
}

}  // namespace zforce
