#include "sfvs/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace sfvs {

Vertex Multigraph::add_vertex() {
  Vertex v = next_vertex_;
  add_vertex(v);
  return v;
}

void Multigraph::add_vertex(Vertex v) {
  incidence_.try_emplace(v);
  next_vertex_ = std::max(next_vertex_, v + 1);
}

EdgeId Multigraph::add_edge(Vertex u, Vertex v) {
  EdgeId id = next_edge_;
  add_edge_with_id(id, u, v);
  return id;
}

void Multigraph::add_edge_with_id(EdgeId id, Vertex u, Vertex v) {
  if (!has_vertex(u) || !has_vertex(v))
    throw std::invalid_argument("edge endpoint is not a vertex");
  if (!edges_.emplace(id, Edge{u, v}).second)
    throw std::invalid_argument("duplicate edge id " + std::to_string(id));
  incidence_[u].push_back(id);
  if (u != v) incidence_[v].push_back(id);
  next_edge_ = std::max(next_edge_, id + 1);
}

void Multigraph::remove_edge(EdgeId e) {
  auto it = edges_.find(e);
  if (it == edges_.end()) return;
  for (Vertex x : {it->second.u, it->second.v}) {
    auto& inc = incidence_[x];
    inc.erase(std::remove(inc.begin(), inc.end(), e), inc.end());
  }
  edges_.erase(it);
}

void Multigraph::remove_vertex(Vertex v) {
  auto it = incidence_.find(v);
  if (it == incidence_.end()) return;
  std::vector<EdgeId> inc = it->second;
  for (EdgeId e : inc) remove_edge(e);
  incidence_.erase(v);
}

const Edge& Multigraph::edge(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end())
    throw std::out_of_range("no edge " + std::to_string(e));
  return it->second;
}

std::vector<Vertex> Multigraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(incidence_.size());
  for (const auto& [v, inc] : incidence_) out.push_back(v);
  return out;
}

std::vector<EdgeId> Multigraph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (const auto& [e, edge] : edges_) out.push_back(e);
  return out;
}

const std::vector<EdgeId>& Multigraph::incident(Vertex v) const {
  auto it = incidence_.find(v);
  if (it == incidence_.end())
    throw std::out_of_range("no vertex " + std::to_string(v));
  return it->second;
}

std::vector<Vertex> Multigraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (EdgeId e : incident(v)) {
    Vertex w = edge(e).other(v);
    if (w != v) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t Multigraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (EdgeId e : incident(v)) d += edge(e).is_loop() ? 2 : 1;
  return d;
}

std::vector<EdgeId> Multigraph::edges_between(Vertex u, Vertex v) const {
  std::vector<EdgeId> out;
  if (!has_vertex(u) || !has_vertex(v)) return out;
  for (EdgeId e : incident(u)) {
    const Edge& ed = edge(e);
    if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexPair make_vertex_pair(Vertex a, Vertex b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

std::set<Vertex> Instance::terminals() const {
  std::set<Vertex> out;
  for (EdgeId e : s_edges) {
    const Edge& ed = graph.edge(e);
    out.insert(ed.u);
    out.insert(ed.v);
  }
  return out;
}

namespace {

struct DenseView {
  std::vector<Vertex> ids;
  std::map<Vertex, int> index;
  // (neighbour index, edge id); loops are omitted.
  std::vector<std::vector<std::pair<int, EdgeId>>> adj;
};

DenseView make_view(const Multigraph& g, const std::set<Vertex>& removed) {
  DenseView d;
  for (Vertex v : g.vertices()) {
    if (removed.count(v)) continue;
    d.index[v] = static_cast<int>(d.ids.size());
    d.ids.push_back(v);
  }
  d.adj.resize(d.ids.size());
  for (const auto& [e, ed] : g.edges()) {
    if (ed.is_loop()) continue;
    auto iu = d.index.find(ed.u);
    auto iv = d.index.find(ed.v);
    if (iu == d.index.end() || iv == d.index.end()) continue;
    d.adj[iu->second].push_back({iv->second, e});
    d.adj[iv->second].push_back({iu->second, e});
  }
  return d;
}

std::set<EdgeId> view_bridges(const DenseView& d) {
  const int n = static_cast<int>(d.ids.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::set<EdgeId> out;
  int timer = 0;
  struct Frame {
    int v;
    EdgeId via;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < d.adj[f.v].size()) {
        auto [w, e] = d.adj[f.v][f.next++];
        if (e == f.via) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) out.insert(done.via);
        }
      }
    }
  }
  return out;
}

}  // namespace

bool has_s_cycle(const Multigraph& g, const std::set<EdgeId>& s_edges,
                 const std::set<Vertex>& removed) {
  bool any = false;
  for (EdgeId e : s_edges) {
    const Edge& ed = g.edge(e);
    if (removed.count(ed.u) || removed.count(ed.v)) continue;
    if (ed.is_loop()) return true;
    any = true;
  }
  if (!any) return false;
  std::set<EdgeId> br = view_bridges(make_view(g, removed));
  for (EdgeId e : s_edges) {
    const Edge& ed = g.edge(e);
    if (removed.count(ed.u) || removed.count(ed.v)) continue;
    if (!br.count(e)) return true;
  }
  return false;
}

std::vector<Vertex> find_short_s_cycle(const Multigraph& g,
                                       const std::set<EdgeId>& s_edges,
                                       const std::set<Vertex>& removed) {
  DenseView d = make_view(g, removed);
  std::vector<Vertex> best;
  const int n = static_cast<int>(d.ids.size());
  for (EdgeId e : s_edges) {
    const Edge& ed = g.edge(e);
    if (removed.count(ed.u) || removed.count(ed.v)) continue;
    if (ed.is_loop()) return {ed.u};
    int src = d.index.at(ed.u), dst = d.index.at(ed.v);
    std::vector<int> parent(n, -2);
    std::deque<int> queue{src};
    parent[src] = -1;
    while (!queue.empty() && parent[dst] == -2) {
      int x = queue.front();
      queue.pop_front();
      for (auto [y, eid] : d.adj[x]) {
        if (eid == e || parent[y] != -2) continue;
        parent[y] = x;
        queue.push_back(y);
      }
    }
    if (parent[dst] == -2) continue;
    std::vector<Vertex> cycle;
    for (int x = dst; x != -1; x = parent[x]) cycle.push_back(d.ids[x]);
    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
    if (best.size() == 2) break;
  }
  return best;
}

bool is_solution(const Instance& inst, const SolutionCandidate& cand) {
  return !has_s_cycle(inst.graph, inst.s_edges, cand.deleted);
}

bool is_solution(const PairInstance& inst, const SolutionCandidate& cand) {
  for (const auto& [x, y] : inst.pairs)
    if (!cand.deleted.count(x) && !cand.deleted.count(y)) return false;
  return is_solution(inst.base, cand);
}

NormalizedInstance normalize(const Instance& inst) {
  NormalizedInstance out;
  Instance& res = out.instance;
  res = inst;

  for (EdgeId e : inst.s_edges) {
    const Edge& ed = inst.graph.edge(e);
    if (ed.is_loop()) out.forced.insert(ed.u);
  }
  for (Vertex v : out.forced) {
    for (EdgeId e : res.graph.incident(v)) res.s_edges.erase(e);
    res.graph.remove_vertex(v);
    --res.budget;
  }

  for (EdgeId e : res.graph.edge_ids())
    if (res.graph.edge(e).is_loop()) {
      res.s_edges.erase(e);
      res.graph.remove_edge(e);
    }

  std::map<VertexPair, std::vector<EdgeId>> groups;
  for (const auto& [e, ed] : res.graph.edges())
    groups[make_vertex_pair(ed.u, ed.v)].push_back(e);
  for (const auto& [endpoints, ids] : groups) {
    std::vector<EdgeId> in_s, not_s;
    for (EdgeId e : ids) (res.s_edges.count(e) ? in_s : not_s).push_back(e);
    std::set<EdgeId> keep;
    if (in_s.empty()) {
      keep.insert(not_s.front());
    } else {
      keep.insert(in_s.front());
      if (!not_s.empty()) {
        keep.insert(not_s.front());
      } else if (in_s.size() > 1) {
        // Two parallel S-edges: the second copy only has to close the 2-cycle.
        keep.insert(in_s[1]);
        res.s_edges.erase(in_s[1]);
      }
    }
    for (EdgeId e : ids)
      if (!keep.count(e)) {
        res.s_edges.erase(e);
        res.graph.remove_edge(e);
      }
  }

  for (Vertex v : res.graph.vertices()) out.origin[v] = v;
  std::set<EdgeId> old_s = res.s_edges;
  res.s_edges.clear();
  for (EdgeId e : old_s) {
    Edge ed = res.graph.edge(e);
    res.graph.remove_edge(e);
    Vertex ve = res.graph.add_vertex();
    Vertex we = res.graph.add_vertex();
    out.origin[ve] = ed.u;
    out.origin[we] = ed.v;
    res.graph.add_edge(ed.u, ve);
    res.s_edges.insert(res.graph.add_edge(ve, we));
    res.graph.add_edge(we, ed.v);
  }
  return out;
}

SolutionCandidate lift_solution(const NormalizedInstance& norm,
                                const SolutionCandidate& cand) {
  SolutionCandidate out;
  out.deleted = norm.forced;
  for (Vertex v : cand.deleted) {
    auto it = norm.origin.find(v);
    out.deleted.insert(it == norm.origin.end() ? v : it->second);
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Multigraph& g) {
  DenseView d = make_view(g, {});
  const int n = static_cast<int>(d.ids.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out[c].push_back(d.ids[x]);
      for (auto [y, e] : d.adj[x])
        if (comp[y] == -1) {
          comp[y] = c;
          stack.push_back(y);
        }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

Multigraph induced_subgraph(const Multigraph& g, const std::set<Vertex>& keep) {
  Multigraph out;
  for (Vertex v : g.vertices())
    if (keep.count(v)) out.add_vertex(v);
  for (const auto& [e, ed] : g.edges())
    if (keep.count(ed.u) && keep.count(ed.v)) out.add_edge_with_id(e, ed.u, ed.v);
  return out;
}

Multigraph torso(const Multigraph& g, const std::set<Vertex>& w,
                 const std::set<EdgeId>& s_edges) {
  Multigraph out = induced_subgraph(g, w);
  // Keep fresh edge ids disjoint from every id of g.
  EdgeId next = g.next_edge_id();

  std::set<Vertex> outside;
  for (Vertex v : g.vertices())
    if (!w.count(v)) outside.insert(v);
  Multigraph rest = induced_subgraph(g, outside);

  std::set<VertexPair> plain;
  for (const auto& [e, ed] : out.edges())
    if (!ed.is_loop() && !s_edges.count(e)) plain.insert(make_vertex_pair(ed.u, ed.v));

  for (const auto& comp : connected_components(rest)) {
    std::set<Vertex> attach;
    for (Vertex x : comp)
      for (EdgeId e : g.incident(x)) {
        Vertex y = g.edge(e).other(x);
        if (w.count(y)) attach.insert(y);
      }
    for (auto a = attach.begin(); a != attach.end(); ++a)
      for (auto b = std::next(a); b != attach.end(); ++b) {
        if (!plain.insert({*a, *b}).second) continue;
        out.add_edge_with_id(next++, *a, *b);
      }
  }
  return out;
}

std::set<EdgeId> bridges(const Multigraph& g) {
  return view_bridges(make_view(g, {}));
}

}  // namespace sfvs
