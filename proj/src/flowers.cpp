#include "sfvs/flowers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "sfvs/gammoid.hpp"
#include "sfvs/path_packing.hpp"

namespace sfvs {

namespace {

// The graph G - z in which every edge at z ends in its own port vertex and
// every S-edge a-b is subdivided into a - x - y - b with {x, y} the pair.
// Pairs are then pairwise disjoint and never touch a port.
struct ParityGraph {
  Multigraph h;
  Vertex center = 0;
  std::set<Vertex> ports;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::map<EdgeId, EdgeId> edge_origin;  // edge of h -> edge of g
  std::set<Vertex> original;             // vertices of g present in h
  std::vector<EdgeId> center_loops;      // S-loops at z
};

ParityGraph build_parity_graph(const Multigraph& g, const std::set<EdgeId>& s, Vertex z) {
  ParityGraph pg;
  pg.center = z;
  for (Vertex v : g.vertices())
    if (v != z) {
      pg.h.add_vertex(v);
      pg.original.insert(v);
    }
  std::set<Vertex> plain_port_at;
  auto add_s_path = [&](Vertex a, Vertex b, EdgeId origin) {
    Vertex x = pg.h.add_vertex(), y = pg.h.add_vertex();
    pg.edge_origin[pg.h.add_edge(a, x)] = origin;
    pg.edge_origin[pg.h.add_edge(x, y)] = origin;
    pg.edge_origin[pg.h.add_edge(y, b)] = origin;
    pg.pairs.emplace_back(x, y);
  };
  for (const auto& [id, e] : g.edges()) {
    bool in_s = s.count(id) != 0;
    if (e.is_loop()) {
      if (e.u == z && in_s) pg.center_loops.push_back(id);
      continue;
    }
    if (e.u == z || e.v == z) {
      Vertex u = e.other(z);
      if (!in_s && !plain_port_at.insert(u).second) continue;
      Vertex port = pg.h.add_vertex();
      pg.ports.insert(port);
      if (in_s)
        add_s_path(port, u, id);
      else
        pg.edge_origin[pg.h.add_edge(port, u)] = id;
      continue;
    }
    if (in_s)
      add_s_path(e.u, e.v, id);
    else
      pg.edge_origin[pg.h.add_edge(e.u, e.v)] = id;
  }
  return pg;
}

GammoidSpec parity_gammoid(const ParityGraph& pg) {
  GammoidSpec spec;
  spec.graph = to_digraph(pg.h);
  spec.sources = pg.ports;
  for (const auto& [x, y] : pg.pairs) {
    spec.ground.push_back(x);
    spec.ground.push_back(y);
  }
  return spec;
}

std::set<Vertex> union_of(const ParityGraph& pg, const std::vector<int>& chosen) {
  std::set<Vertex> t;
  for (int i : chosen) {
    t.insert(pg.pairs[i].first);
    t.insert(pg.pairs[i].second);
  }
  return t;
}

std::vector<int> exhaustive_pairs(const ParityGraph& pg) {
  GammoidSpec spec = parity_gammoid(pg);
  std::vector<int> best, current;
  const int n = static_cast<int>(pg.pairs.size());
  // Independence is closed under subsets, so extending only linked sets is
  // enough; the bound |ports| / 2 prunes early.
  const int cap = static_cast<int>(pg.ports.size()) / 2;
  std::function<void(int)> grow = [&](int from) {
    if (current.size() > best.size()) best = current;
    if (static_cast<int>(best.size()) >= cap) return;
    if (static_cast<int>(current.size()) + (n - from) <= static_cast<int>(best.size())) return;
    for (int i = from; i < n; ++i) {
      current.push_back(i);
      if (linked(spec, union_of(pg, current))) grow(i + 1);
      current.pop_back();
      if (static_cast<int>(best.size()) >= cap) return;
    }
  };
  grow(0);
  return best;
}

// Rank of sum_i x_i (a_i b_i^T - b_i a_i^T) over the selected pairs.
int parity_rank(const MatroidRep& rep, const std::vector<Fp>& weight,
                const std::vector<bool>& active) {
  const int r = rep.matrix.rows();
  FieldMatrix y(r, r);
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (!active[i]) continue;
    const int ca = static_cast<int>(2 * i), cb = static_cast<int>(2 * i + 1);
    for (int p = 0; p < r; ++p) {
      Fp ap = rep.matrix.at(p, ca) * weight[i], bp = rep.matrix.at(p, cb) * weight[i];
      if (ap.is_zero() && bp.is_zero()) continue;
      for (int q = 0; q < r; ++q)
        y.at(p, q) += ap * rep.matrix.at(q, cb) - bp * rep.matrix.at(q, ca);
    }
  }
  return rank(y);
}

std::vector<int> algebraic_pairs(const ParityGraph& pg, std::uint64_t seed) {
  if (pg.pairs.empty() || pg.ports.size() < 2) return {};
  GammoidSpec spec = parity_gammoid(pg);
  MatroidRep rep = represent(spec, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Fp> weight(pg.pairs.size());
  for (auto& w : weight) w = Fp::random_nonzero(rng);
  std::vector<bool> active(pg.pairs.size(), true);
  const int full = parity_rank(rep, weight, active);
  for (std::size_t i = 0; i < active.size(); ++i) {
    active[i] = false;
    if (parity_rank(rep, weight, active) != full) active[i] = true;
  }
  std::vector<int> chosen;
  for (std::size_t i = 0; i < active.size(); ++i)
    if (active[i]) chosen.push_back(static_cast<int>(i));
  if (static_cast<int>(chosen.size()) * 2 != full || !linked(spec, union_of(pg, chosen)))
    return exhaustive_pairs(pg);
  return chosen;
}

Flower reconstruct(const ParityGraph& pg, const std::vector<int>& chosen) {
  Flower f;
  f.center = pg.center;
  for (EdgeId loop : pg.center_loops) f.cycles.push_back(Cycle{{pg.center}, {loop}});
  if (chosen.empty()) return f;

  std::set<Vertex> targets = union_of(pg, chosen);
  PathPacking packing = max_vertex_disjoint_st_paths(pg.h, pg.ports, targets);
  if (packing.size() != targets.size()) throw std::logic_error("flower paths not linked");
  std::map<Vertex, std::vector<Vertex>> path_to;
  for (const auto& p : packing.paths) path_to[p.back()] = p;

  for (int i : chosen) {
    // port ... x, y ... port
    std::vector<Vertex> walk = path_to.at(pg.pairs[i].first);
    const auto& back = path_to.at(pg.pairs[i].second);
    walk.insert(walk.end(), back.rbegin(), back.rend());
    Cycle c;
    c.vertices.push_back(pg.center);
    for (std::size_t j = 0; j + 1 < walk.size(); ++j) {
      auto between = pg.h.edges_between(walk[j], walk[j + 1]);
      EdgeId origin = pg.edge_origin.at(*std::min_element(between.begin(), between.end()));
      if (c.edges.empty() || c.edges.back() != origin) c.edges.push_back(origin);
      if (j + 1 < walk.size() - 1 && pg.original.count(walk[j + 1]))
        c.vertices.push_back(walk[j + 1]);
    }
    f.cycles.push_back(std::move(c));
  }
  return f;
}

}  // namespace

Flower max_flower(const Multigraph& g, const std::set<EdgeId>& s, Vertex z,
                  ParityBackend backend, std::uint64_t seed) {
  if (!g.has_vertex(z)) throw std::invalid_argument("flower center is not a vertex");
  ParityGraph pg = build_parity_graph(g, s, z);
  std::vector<int> chosen =
      backend == ParityBackend::Algebraic ? algebraic_pairs(pg, seed) : exhaustive_pairs(pg);
  Flower f = reconstruct(pg, chosen);
  if (!is_valid_flower(g, s, f)) throw std::logic_error("reconstructed flower is invalid");
  return f;
}

bool has_flower_of_order(const Multigraph& g, const std::set<EdgeId>& s, Vertex z, int t,
                         ParityBackend backend, std::uint64_t seed) {
  if (t <= 0) return true;
  return static_cast<int>(max_flower(g, s, z, backend, seed).order()) >= t;
}

int exhaustive_parity_order(const Multigraph& g, const std::set<EdgeId>& s, Vertex z) {
  ParityGraph pg = build_parity_graph(g, s, z);
  return static_cast<int>(exhaustive_pairs(pg).size() + pg.center_loops.size());
}

bool is_valid_flower(const Multigraph& g, const std::set<EdgeId>& s, const Flower& f) {
  std::set<Vertex> petals;
  std::set<EdgeId> used;
  for (const Cycle& c : f.cycles) {
    const std::size_t len = c.vertices.size();
    if (len == 0 || c.edges.size() != len || c.vertices[0] != f.center) return false;
    bool has_s = false;
    std::set<Vertex> own;
    for (std::size_t i = 0; i < len; ++i) {
      EdgeId e = c.edges[i];
      if (!g.has_edge(e) || !used.insert(e).second) return false;
      const Edge& ed = g.edge(e);
      Vertex a = c.vertices[i], b = c.vertices[(i + 1) % len];
      if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
      has_s = has_s || s.count(e) != 0;
      if (i > 0 && (c.vertices[i] == f.center || !own.insert(c.vertices[i]).second))
        return false;
    }
    if (!has_s) return false;
    for (Vertex v : own)
      if (!petals.insert(v).second) return false;
  }
  return true;
}

}  // namespace sfvs
