#include <doctest.h>

#include <algorithm>
#include <array>

#include "oracle.hpp"
#include "shapes.hpp"
#include "zforce/errors.hpp"
#include "zforce/forcing.hpp"
#include "zforce/generators.hpp"

using namespace zforce;

namespace {

std::size_t count_rule(const ForcingResult& r, LmRule rule) {
  return static_cast<std::size_t>(
      std::ranges::count_if(r.trace, [&](const TraceEvent& e) { return e.rule == rule; }));
}

ForcingResult lm(const Graph& g, LmMode mode = LmMode::closure_consistent) {
  return lm_zero_forcing(g, LmOptions{mode, true});
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(closure(shapes::path(3), {0}) == VertexSet{0, 1, 2});
  CHECK(closure(shapes::complete(3), {0}) == VertexSet{0});
  CHECK(closure(shapes::star(3), {1, 2}) == VertexSet{0, 1, 2, 3});
  CHECK(closure(shapes::path(4), {}).empty());
  Graph g = shapes::path(3);
  g.remove_vertex(2);
  CHECK_THROWS_AS(closure(g, {2}), InvalidArgument);
}

TEST_CASE("is_forcing_set examples") {
  CHECK(is_forcing_set(shapes::path(6), {0}));
  CHECK_FALSE(is_forcing_set(shapes::path(6), {2}));
  Graph k4 = shapes::complete(4);
  CHECK_FALSE(is_forcing_set(k4, {0, 1}));
  CHECK_FALSE(is_forcing_set(k4, {2, 3}));
  CHECK(is_forcing_set(k4, {0, 1, 2}));
  CHECK(is_forcing_set(k4, {1, 2, 3}));
  CHECK_FALSE(is_forcing_set(k4, {}));
  CHECK(is_forcing_set(Graph(0), {}));
}

TEST_CASE("exact oracle values") {
  CHECK(exact_zero_forcing(shapes::path(8)).size == 1);
  CHECK(exact_zero_forcing(shapes::cycle(5)).size == 2);
  CHECK(exact_zero_forcing(shapes::complete(5)).size == 4);
  CHECK(exact_zero_forcing(shapes::complete(4)).size == 3);
  CHECK(exact_zero_forcing(shapes::star(3)).size == 2);
  CHECK(exact_zero_forcing(Graph(0)).size == 0);
  CHECK(exact_zero_forcing(Graph(3)).size == 3);

  ExactResult c5 = exact_zero_forcing(shapes::cycle(5));
  CHECK(is_forcing_set(shapes::cycle(5), c5.witness));
  // increasing size, lexicographic within a size
  CHECK(c5.witness == VertexSet{0, 1});

  CHECK_THROWS_AS(exact_zero_forcing(shapes::path(17)), InvalidArgument);
  CHECK(exact_zero_forcing(shapes::path(17), 20).size == 1);
}

TEST_CASE("exact oracle on complete bipartite graphs") {
  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::size_t n = m; n <= 4; ++n) {
      Graph g = shapes::complete_bipartite(m, n);
      int reference = oracle::zero_forcing_number(oracle::matrix(g));
      CHECK(reference == static_cast<int>(m + n - 2));
      CHECK(exact_zero_forcing(g).size == m + n - 2);
    }
  }
}

TEST_CASE("reference oracle agrees with hand values") {
  CHECK(oracle::zero_forcing_number(oracle::matrix(shapes::cycle(5))) == 2);
  CHECK(oracle::zero_forcing_number(oracle::matrix(shapes::complete(4))) == 3);
  CHECK(oracle::zero_forcing_number(oracle::matrix(shapes::star(3))) == 2);
  CHECK(oracle::zero_forcing_number(
            oracle::matrix(gen_stars(StarSpec{{3, 3}, StarArrangement::isolated}))) == 4);
  CHECK(oracle::zero_forcing_number(
            oracle::matrix(gen_stars(StarSpec{{5}, StarArrangement::isolated}))) == 4);
}

TEST_CASE("LM on small shapes") {
  ForcingResult p5 = lm(shapes::path(5));
  CHECK(p5.z_lm == 1);
  CHECK(p5.delta_z == 0);
  REQUIRE(p5.zfs.size() == 1);
  CHECK((p5.zfs[0] == 0 || p5.zfs[0] == 4));

  for (LmMode mode : {LmMode::closure_consistent, LmMode::strict_literal}) {
    ForcingResult k4 = lm(shapes::complete(4), mode);
    CHECK(k4.z_lm == 3);
    CHECK(k4.delta_z == 2);
    CHECK(count_rule(k4, LmRule::max_degree) == 2);
  }

  ForcingResult star = lm(shapes::star(3));
  CHECK(star.z_lm == 2);
  CHECK(star.delta_z == 0);
  ForcingResult literal_star = lm(shapes::star(3), LmMode::strict_literal);
  CHECK(literal_star.z_lm == 3);

  CHECK(lm(Graph(0)).z_lm == 0);
  ForcingResult isolated = lm(Graph(3));
  CHECK(isolated.z_lm == 3);
  CHECK(count_rule(isolated, LmRule::isolated) == 3);

  ForcingResult c6 = lm(shapes::cycle(6));
  CHECK(c6.z_lm == 2);
  CHECK(c6.delta_z == 1);
}

TEST_CASE("closure-consistent mode: pendant paths and a waiting branch vertex") {
  // spider: centre 0 with legs 1, 2, 3-4, 5-6; Z = 3
  Graph spider = shapes::from(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  CHECK(exact_zero_forcing(spider).size == 3);
  ForcingResult r = lm(spider);
  CHECK(r.z_lm == 3);
  CHECK(r.delta_z == 0);
  CHECK(lm(spider, LmMode::strict_literal).z_lm > 3);

  // double star: 1 carries leaves 0, 2 and joins 3, which carries 4, 5; Z = 2
  Graph double_star = shapes::from(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
  ForcingResult d = lm(double_star);
  CHECK(d.z_lm == 2);
  CHECK(d.delta_z == 0);
}

TEST_CASE("trace records every start") {
  Graph g = gen_uniform(10, 0.4, 3);
  ForcingResult r = lm(g);
  std::size_t starts = 0;
  for (const auto& e : r.trace) starts += e.rule == LmRule::force ? 0 : 1;
  CHECK(starts == r.z_lm);
  CHECK(count_rule(r, LmRule::max_degree) == r.delta_z);
  CHECK(lm_zero_forcing(g).trace.empty());
}

TEST_CASE("minimum rank bound") {
  CHECK(minimum_rank_lower_bound(10, 3) == 7);
  CHECK(minimum_rank_lower_bound(5, 5) == 0);
  CHECK(minimum_rank_lower_bound(4, exact_zero_forcing(shapes::complete(4)).size) == 1);
  CHECK_THROWS_AS(minimum_rank_lower_bound(3, 4), InvalidArgument);
}

TEST_CASE("mode names") {
  CHECK(parse_lm_mode("closure-consistent") == LmMode::closure_consistent);
  CHECK(parse_lm_mode("strict-literal") == LmMode::strict_literal);
  CHECK(to_string(LmMode::strict_literal) == "strict-literal");
  CHECK_THROWS_AS(parse_lm_mode("greedy"), InvalidArgument);
}

TEST_CASE("property: closure matches synchronous rounds and is order independent") {
  for (Seed seed = 0; seed < 150; ++seed) {
    const std::size_t n = 4 + seed % 9;
    Graph g = gen_uniform(n, 0.15 + 0.1 * static_cast<double>(seed % 5), seed);
    Rng rng(seed ^ 0xabcdef);
    VertexSet initial;
    std::vector<bool> mask(n, false);
    for (Vertex v = 0; v < n; ++v) {
      if (rng.uniform() < 0.35) {
        initial.push_back(v);
        mask[v] = true;
      }
    }
    VertexSet forward = closure(g, initial);
    VertexSet backward = closure(g, VertexSet(initial.rbegin(), initial.rend()));
    CHECK(forward == backward);
    auto reference = oracle::closure(oracle::matrix(g), mask);
    VertexSet expected;
    for (Vertex v = 0; v < n; ++v) {
      if (reference[v]) expected.push_back(v);
    }
    CHECK(forward == expected);
  }
}

TEST_CASE("property: closure is monotone and forcing sets are upward closed") {
  for (Seed seed = 0; seed < 100; ++seed) {
    const std::size_t n = 6 + seed % 6;
    Graph g = gen_uniform(n, 0.3, seed + 500);
    Rng rng(seed);
    VertexSet small, large;
    for (Vertex v = 0; v < n; ++v) {
      double u = rng.uniform();
      if (u < 0.2) small.push_back(v);
      if (u < 0.5) large.push_back(v);
    }
    VertexSet cs = closure(g, small);
    VertexSet cl = closure(g, large);
    CHECK(std::ranges::includes(cl, cs));

    ExactResult best = exact_zero_forcing(g);
    VertexSet bigger = best.witness;
    for (Vertex v = 0; v < n; ++v) {
      if (std::ranges::find(bigger, v) == bigger.end() && rng.uniform() < 0.5) {
        bigger.push_back(v);
      }
    }
    std::ranges::sort(bigger);
    CHECK(is_forcing_set(g, bigger));
  }
}

TEST_CASE("property: exact solver matches the reference oracle") {
  for (Seed seed = 0; seed < 120; ++seed) {
    Graph g = gen_uniform(3 + seed % 8, 0.2 + 0.2 * static_cast<double>(seed % 3), seed);
    CHECK(exact_zero_forcing(g).size ==
          static_cast<std::size_t>(oracle::zero_forcing_number(oracle::matrix(g))));
  }
}

TEST_CASE("property: LM sets are valid and never beat the optimum") {
  for (Seed seed = 0; seed < 240; ++seed) {
    double p = std::array{0.2, 0.4, 0.6}[seed % 3];
    Graph g = gen_uniform(3 + seed % 8, p, seed * 7 + 1);
    std::size_t z = exact_zero_forcing(g).size;
    for (LmMode mode : {LmMode::closure_consistent, LmMode::strict_literal}) {
      ForcingResult r = lm_zero_forcing(g, LmOptions{mode, false});
      CHECK(is_forcing_set(g, r.zfs));
      CHECK(r.z_lm >= z);
      CHECK(r.z_lm == r.zfs.size());
      CHECK(r.delta_z <= r.z_lm);
    }
  }
}

TEST_CASE("property: closure-consistent LM is exact on forests") {
  for (Seed seed = 0; seed < 150; ++seed) {
    std::size_t n = 2 + seed % 13;
    Graph g = gen_random_tree(n, seed + 9000);
    if (seed % 4 == 0 && n > 3) g.remove_vertex(static_cast<Vertex>(seed % n));
    ForcingResult r = lm_zero_forcing(g);
    CHECK(r.z_lm == exact_zero_forcing(g).size);
    CHECK(r.delta_z == 0);
    CHECK(is_forcing_set(g, r.zfs));
  }
}

TEST_CASE("property: LM is exact on paths, cycles, stars and complete graphs") {
  for (std::size_t n = 3; n <= 10; ++n) {
    CHECK(lm_zero_forcing(shapes::path(n)).z_lm == 1);
    CHECK(lm_zero_forcing(shapes::cycle(n)).z_lm == 2);
    CHECK(lm_zero_forcing(shapes::star(n)).z_lm == n - 1);
    if (n <= 8) CHECK(lm_zero_forcing(shapes::complete(n)).z_lm == n - 1);
  }
}

TEST_CASE("LM sets stay valid on generated graphs") {
  for (Seed seed = 0; seed < 6; ++seed) {
    Graph pa = gen_pa(PaParams{600, 2, 0.3 + 0.4 * static_cast<double>(seed)}, seed);
    Graph de = gen_deactivation(DeactParams{600, 2, 0.3 + 0.4 * static_cast<double>(seed)}, seed);
    for (const Graph* g : {&pa, &de}) {
      for (LmMode mode : {LmMode::closure_consistent, LmMode::strict_literal}) {
        CHECK(is_forcing_set(*g, lm_zero_forcing(*g, LmOptions{mode, false}).zfs));
      }
    }
  }
}
