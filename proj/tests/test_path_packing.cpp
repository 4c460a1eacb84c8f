#include "doctest.h"
#include "oracles.hpp"
#include "sfvs/path_packing.hpp"

using namespace sfvs;

namespace {

Multigraph star(int leaves) {
  Multigraph g;
  for (int v = 0; v <= leaves; ++v) g.add_vertex(v);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// u = 0, v = 1 joined by `count` internally disjoint paths of length two.
Multigraph theta(int count) {
  Multigraph g;
  g.add_vertex(0);
  g.add_vertex(1);
  for (int i = 0; i < count; ++i) {
    Vertex m = g.add_vertex();
    g.add_edge(0, m);
    g.add_edge(m, 1);
  }
  return g;
}

}  // namespace

TEST_CASE("A-path examples") {
  Multigraph edge;
  edge.add_vertex(0);
  edge.add_vertex(1);
  edge.add_edge(0, 1);
  CHECK(max_disjoint_apaths(edge, {0, 1}).size() == 1);
  CHECK(max_disjoint_apaths(star(3), {1, 2, 3}).size() == 1);
  CHECK(apath_number(star(3), {1, 2, 3}) == 1);
  CHECK(apath_number(star(3), {1}) == 0);
}

TEST_CASE("A-path packing matches exhaustive search") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4 + trial % 6;
    auto ri = oracle::random_instance(rng, n, n + trial % 7, 0, trial % 2 == 0, true);
    std::set<Vertex> a;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) a.insert(v);
    auto p = max_disjoint_apaths(ri.graph, a);
    CHECK(is_apath_packing(ri.graph, a, p));
    CHECK(static_cast<int>(p.size()) == oracle::max_apaths_exhaustive(ri.graph, a));
  }
}

TEST_CASE("Gallai packing or blocker") {
  auto big = gallai_blocker_or_packing(theta(4), {0, 1}, 1);
  // Only one A-path can exist between two terminals.
  CHECK_FALSE(big.has_packing);
  CHECK(big.blocker.size() <= 2);

  auto s = gallai_blocker_or_packing(star(3), {1, 2, 3}, 1);
  CHECK_FALSE(s.has_packing);
  CHECK(s.blocker.size() <= 2);
  auto s0 = gallai_blocker_or_packing(star(3), {1, 2, 3}, 0);
  CHECK(s0.has_packing);
  CHECK(s0.packing.size() == 1);

  Multigraph empty;
  empty.add_vertex(0);
  auto none = gallai_blocker_or_packing(empty, {0}, 3);
  CHECK(none.blocker.empty());

  Multigraph many = theta(0);
  for (int i = 0; i < 4; ++i) {
    Vertex a = many.add_vertex(), b = many.add_vertex(), m = many.add_vertex();
    many.add_edge(a, m);
    many.add_edge(m, b);
  }
  std::set<Vertex> ends;
  for (Vertex v : many.vertices())
    if (many.degree(v) == 1) ends.insert(v);
  auto pk = gallai_blocker_or_packing(many, ends, 2);
  CHECK(pk.has_packing);
  CHECK(pk.packing.size() == 3);
  CHECK(is_apath_packing(many, ends, pk.packing));
}

TEST_CASE("Gallai outcome is always certified") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 5 + trial % 5;
    auto ri = oracle::random_instance(rng, n, n + 2 + trial % 5, 0, false, true);
    std::set<Vertex> a;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) a.insert(v);
    int k = trial % 3;
    auto out = gallai_blocker_or_packing(ri.graph, a, k);
    int best = oracle::max_apaths_exhaustive(ri.graph, a);
    if (out.has_packing) {
      CHECK(static_cast<int>(out.packing.size()) == k + 1);
      CHECK(is_apath_packing(ri.graph, a, out.packing));
    } else {
      CHECK(best <= k);
      CHECK(static_cast<int>(out.blocker.size()) <= 2 * best);
      Multigraph h = ri.graph;
      std::set<Vertex> rest;
      for (Vertex v : out.blocker) h.remove_vertex(v);
      for (Vertex v : a)
        if (!out.blocker.count(v)) rest.insert(v);
      CHECK(oracle::max_apaths_exhaustive(h, rest) == 0);
    }
  }
}

TEST_CASE("s-t path examples") {
  Multigraph g = star(2);
  CHECK(max_vertex_disjoint_st_paths(g, {1, 2}, {1, 2}).size() == 2);
  CHECK(max_vertex_disjoint_st_paths(g, {1}, {2}).size() == 1);
  auto p = max_vertex_disjoint_st_paths(g, {1}, {2});
  CHECK(p.paths[0] == std::vector<Vertex>{1, 0, 2});
}

TEST_CASE("s-t packings meet Menger's bound") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + trial % 7;
    Digraph d = oracle::random_digraph(rng, n, 0.25);
    std::set<Vertex> s, t;
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) s.insert(v);
      if (rng() % 3 == 0) t.insert(v);
    }
    auto p = max_vertex_disjoint_st_paths(d, s, t);
    CHECK(static_cast<int>(p.size()) == oracle::min_vertex_separator(d, s, t));
    std::set<Vertex> used;
    for (const auto& path : p.paths) {
      CHECK(s.count(path.front()));
      CHECK(t.count(path.back()));
      for (Vertex v : path) CHECK(used.insert(v).second);
    }
  }
}
