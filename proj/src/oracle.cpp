#include "sfvs/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace sfvs {

namespace {

// Depth-bounded branching. allowed filters the vertices that may be deleted.
bool branch(const PairInstance& inst, std::set<Vertex>& chosen, int budget,
            const std::function<bool(Vertex)>& allowed) {
  for (const auto& [x, y] : inst.pairs) {
    if (chosen.count(x) || chosen.count(y)) continue;
    if (budget == 0) return false;
    for (Vertex v : {x, y}) {
      if (!allowed(v)) continue;
      chosen.insert(v);
      if (branch(inst, chosen, budget - 1, allowed)) return true;
      chosen.erase(v);
    }
    return false;
  }
  std::vector<Vertex> cycle = find_short_s_cycle(inst.base.graph, inst.base.s_edges, chosen);
  if (cycle.empty()) return true;
  if (budget == 0) return false;
  std::sort(cycle.begin(), cycle.end());
  for (Vertex v : cycle) {
    if (!allowed(v)) continue;
    chosen.insert(v);
    if (branch(inst, chosen, budget - 1, allowed)) return true;
    chosen.erase(v);
  }
  return false;
}

void check_caps(const Multigraph& g, int max_k, const SolverLimits& limits) {
  if (static_cast<int>(g.num_vertices()) > limits.max_vertices)
    throw CapExceeded("solver: " + std::to_string(g.num_vertices()) + " vertices exceed cap " +
                      std::to_string(limits.max_vertices));
  if (max_k > limits.max_k)
    throw CapExceeded("solver: budget " + std::to_string(max_k) + " exceeds cap " +
                      std::to_string(limits.max_k));
}

SolveResult deepen(const PairInstance& inst, int max_k,
                   const std::function<bool(Vertex)>& allowed) {
  SolveResult res;
  for (int size = 0; size <= max_k; ++size) {
    std::set<Vertex> chosen;
    if (branch(inst, chosen, size, allowed)) {
      res.feasible = true;
      res.optimum = size;
      res.witness.deleted = std::move(chosen);
      return res;
    }
  }
  return res;
}

}  // namespace

SolveResult solve_exact(const PairInstance& inst, int max_k, const SolverLimits& limits) {
  check_caps(inst.base.graph, max_k, limits);
  return deepen(inst, max_k, [](Vertex) { return true; });
}

SolveResult solve_exact(const Instance& inst, int max_k, const SolverLimits& limits) {
  return solve_exact(PairInstance{inst, {}}, max_k, limits);
}

bool decide(const PairInstance& inst, const SolverLimits& limits) {
  if (inst.base.budget < 0) return false;
  return solve_exact(inst, inst.base.budget, limits).feasible;
}

bool decide(const Instance& inst, const SolverLimits& limits) {
  return decide(PairInstance{inst, {}}, limits);
}

SolutionCandidate greedy_z(const Instance& inst) {
  const std::set<Vertex> terminals = inst.terminals();
  SolutionCandidate z;
  auto free_neighbour = [&](Vertex t) -> std::optional<Vertex> {
    for (Vertex y : inst.graph.neighbors(t))
      if (!terminals.count(y)) return y;
    return std::nullopt;
  };
  for (EdgeId e : inst.s_edges) {
    if (!has_s_cycle(inst.graph, {e}, z.deleted)) continue;
    const Edge& ed = inst.graph.edge(e);
    auto base = free_neighbour(std::min(ed.u, ed.v));
    if (!base) base = free_neighbour(std::max(ed.u, ed.v));
    if (base) z.deleted.insert(*base);
  }
  while (true) {
    std::vector<Vertex> cycle = find_short_s_cycle(inst.graph, inst.s_edges, z.deleted);
    if (cycle.empty()) break;
    auto pick = std::find_if(cycle.begin(), cycle.end(),
                             [&](Vertex v) { return !terminals.count(v); });
    if (pick == cycle.end())
      throw std::invalid_argument("greedy_z: an S-cycle lies inside V(S)");
    z.deleted.insert(*pick);
  }
  std::vector<Vertex> order(z.deleted.rbegin(), z.deleted.rend());
  for (Vertex v : order) {
    z.deleted.erase(v);
    if (has_s_cycle(inst.graph, inst.s_edges, z.deleted)) z.deleted.insert(v);
  }
  return z;
}

FeasibleSolution feasible_z(const Instance& inst, const SolverLimits& limits) {
  FeasibleSolution out;
  const std::set<Vertex> terminals = inst.terminals();
  if (static_cast<int>(inst.graph.num_vertices()) <= limits.max_vertices) {
    SolveResult r = deepen(PairInstance{inst, {}}, limits.max_k,
                           [&](Vertex v) { return !terminals.count(v); });
    if (r.feasible) {
      out.z = std::move(r.witness);
      out.factor = 1;
      return out;
    }
  }
  out.z = greedy_z(inst);
  return out;
}

int brute_force_flower(const Multigraph& g, const std::set<EdgeId>& s, Vertex z) {
  if (g.num_vertices() > 20) throw CapExceeded("brute_force_flower: graph too large");
  std::map<Vertex, int> bit;
  for (Vertex v : g.vertices())
    if (v != z) bit[v] = static_cast<int>(bit.size());

  int loops = 0;
  for (EdgeId e : g.incident(z))
    if (g.edge(e).is_loop() && s.count(e)) ++loops;

  // Vertex sets (without z) of S-cycles through z.
  std::set<std::uint32_t> cycles;
  std::function<void(Vertex, EdgeId, EdgeId, std::uint32_t, bool)> walk =
      [&](Vertex x, EdgeId first, EdgeId via, std::uint32_t used, bool seen_s) {
        for (EdgeId e : g.incident(x)) {
          const Edge& ed = g.edge(e);
          if (e == via || ed.is_loop()) continue;
          Vertex y = ed.other(x);
          bool s_now = seen_s || s.count(e) != 0;
          if (y == z) {
            if (e != first && s_now) cycles.insert(used);
            continue;
          }
          std::uint32_t b = 1u << bit[y];
          if (used & b) continue;
          walk(y, first, e, used | b, s_now);
        }
      };
  for (EdgeId e : g.incident(z)) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    Vertex y = ed.other(z);
    walk(y, e, e, 1u << bit[y], s.count(e) != 0);
  }

  std::vector<std::uint32_t> minimal;
  for (std::uint32_t c : cycles) {
    bool keep = true;
    for (std::uint32_t o : cycles)
      if (o != c && (o & c) == o) keep = false;
    if (keep) minimal.push_back(c);
  }
  int best = 0;
  std::function<void(std::size_t, std::uint32_t, int)> pack = [&](std::size_t i, std::uint32_t used,
                                                                   int count) {
    best = std::max(best, count);
    for (std::size_t j = i; j < minimal.size(); ++j)
      if ((minimal[j] & used) == 0) pack(j + 1, used | minimal[j], count + 1);
  };
  pack(0, 0, 0);
  return best + loops;
}

}  // namespace sfvs
