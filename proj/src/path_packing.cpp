#include "sfvs/path_packing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace sfvs {

Digraph to_digraph(const Multigraph& g) {
  Digraph d;
  for (Vertex v : g.vertices()) d.add_vertex(v);
  for (const auto& [id, e] : g.edges()) {
    if (e.is_loop()) continue;
    d.add_arc(e.u, e.v);
    d.add_arc(e.v, e.u);
  }
  return d;
}

namespace {

// Unit-capacity residual network with explicit reverse arcs.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : adj_(n) {}

  void add(int from, int to) {
    adj_[from].push_back(static_cast<int>(to_.size()));
    to_.push_back(to);
    cap_.push_back(1);
    adj_[to].push_back(static_cast<int>(to_.size()));
    to_.push_back(from);
    cap_.push_back(0);
  }

  int max_flow(int s, int t) {
    int flow = 0;
    std::vector<int> via(adj_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{s};
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        int x = queue.front();
        queue.pop_front();
        for (int a : adj_[x]) {
          if (cap_[a] == 0 || via[to_[a]] != -1) continue;
          via[to_[a]] = a;
          queue.push_back(to_[a]);
        }
      }
      if (via[t] == -1) return flow;
      for (int x = t; x != s; x = to_[via[x] ^ 1]) {
        --cap_[via[x]];
        ++cap_[via[x] ^ 1];
      }
      ++flow;
    }
  }

  // Forward arcs out of x that carry flow.
  std::vector<int> flowing(int x) const {
    std::vector<int> out;
    for (int a : adj_[x])
      if ((a & 1) == 0 && cap_[a] == 0) out.push_back(to_[a]);
    return out;
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<int> cap_;
};

}  // namespace

PathPacking max_vertex_disjoint_st_paths(const Digraph& g, const std::set<Vertex>& s,
                                         const std::set<Vertex>& t) {
  std::vector<Vertex> verts(g.vertices.begin(), g.vertices.end());
  std::map<Vertex, int> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  const int n = static_cast<int>(verts.size());
  const int src = 2 * n, snk = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (int i = 0; i < n; ++i) net.add(2 * i, 2 * i + 1);
  for (const auto& [u, v] : g.arcs) {
    if (u == v) continue;
    net.add(2 * index.at(u) + 1, 2 * index.at(v));
  }
  for (Vertex v : s)
    if (index.count(v)) net.add(src, 2 * index[v]);
  for (Vertex v : t)
    if (index.count(v)) net.add(2 * index[v] + 1, snk);
  net.max_flow(src, snk);

  PathPacking out;
  for (int start : net.flowing(src)) {
    std::vector<Vertex> path;
    int x = start;  // an in-node
    while (true) {
      path.push_back(verts[x / 2]);
      int next = net.flowing(x + 1).front();
      if (next == snk) break;
      x = next;
    }
    out.paths.push_back(std::move(path));
  }
  std::sort(out.paths.begin(), out.paths.end());
  return out;
}

PathPacking max_vertex_disjoint_st_paths(const Multigraph& g, const std::set<Vertex>& s,
                                         const std::set<Vertex>& t) {
  return max_vertex_disjoint_st_paths(to_digraph(g), s, t);
}

namespace {

// Gallai's auxiliary graph: vertices outside a are split into two adjacent
// copies, and every edge is replaced by all edges between copies of its ends.
// A maximum matching has |V \ a| + (A-path number) edges.
struct SplitGraph {
  std::vector<Vertex> origin;          // node -> vertex of g
  std::vector<int> partner;            // node -> twin copy or -1 for a-vertices
  std::vector<std::vector<int>> copies;
  std::vector<std::size_t> mate;
  std::size_t matching_size = 0;
  int outside = 0;
};

SplitGraph match_split_graph(const Multigraph& g, const std::set<Vertex>& a) {
  SplitGraph sg;
  std::map<Vertex, int> vidx;
  for (Vertex v : g.vertices()) {
    int i = static_cast<int>(sg.copies.size());
    vidx[v] = i;
    sg.copies.emplace_back();
    int c1 = static_cast<int>(sg.origin.size());
    sg.origin.push_back(v);
    sg.partner.push_back(-1);
    sg.copies[i].push_back(c1);
    if (!a.count(v)) {
      sg.origin.push_back(v);
      sg.partner.push_back(c1);
      sg.partner[c1] = c1 + 1;
      sg.copies[i].push_back(c1 + 1);
      ++sg.outside;
    }
  }
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph h(sg.origin.size());
  std::set<std::pair<int, int>> added;
  auto link = [&](int x, int y) {
    if (x > y) std::swap(x, y);
    if (added.insert({x, y}).second) boost::add_edge(x, y, h);
  };
  for (std::size_t x = 0; x < sg.partner.size(); ++x)
    if (sg.partner[x] > static_cast<int>(x)) link(static_cast<int>(x), sg.partner[x]);
  for (const auto& [id, e] : g.edges()) {
    if (e.is_loop()) continue;
    for (int x : sg.copies[vidx[e.u]])
      for (int y : sg.copies[vidx[e.v]]) link(x, y);
  }
  sg.mate.assign(sg.origin.size(), 0);
  boost::edmonds_maximum_cardinality_matching(h, sg.mate.data());
  sg.matching_size = boost::matching_size(h, sg.mate.data());
  return sg;
}

Multigraph without(const Multigraph& g, const std::set<Vertex>& removed) {
  Multigraph h = g;
  for (Vertex v : removed) h.remove_vertex(v);
  return h;
}

std::set<Vertex> minus(const std::set<Vertex>& a, const std::set<Vertex>& b) {
  std::set<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

int apath_number(const Multigraph& g, const std::set<Vertex>& a) {
  SplitGraph sg = match_split_graph(g, a);
  return static_cast<int>(sg.matching_size) - sg.outside;
}

PathPacking max_disjoint_apaths(const Multigraph& g, const std::set<Vertex>& a) {
  SplitGraph sg = match_split_graph(g, a);
  const std::size_t none = boost::graph_traits<boost::adjacency_list<>>::null_vertex();
  PathPacking out;
  std::vector<bool> used(sg.origin.size(), false);
  // Walk the components of M xor N0 that start at a matched a-vertex.
  for (std::size_t start = 0; start < sg.origin.size(); ++start) {
    if (sg.partner[start] != -1 || used[start] || sg.mate[start] == none) continue;
    std::vector<int> nodes{static_cast<int>(start)};
    used[start] = true;
    bool closed = false;
    int x = static_cast<int>(start);
    while (true) {
      int y = static_cast<int>(sg.mate[x]);  // matching edge
      nodes.push_back(y);
      used[y] = true;
      if (sg.partner[y] == -1) {
        closed = true;
        break;
      }
      int z = sg.partner[y];  // twin edge
      nodes.push_back(z);
      used[z] = true;
      if (sg.mate[z] == none) break;
      x = z;
    }
    if (!closed) continue;
    std::vector<Vertex> path;
    for (int node : nodes)
      if (path.empty() || path.back() != sg.origin[node]) path.push_back(sg.origin[node]);
    out.paths.push_back(std::move(path));
  }
  if (static_cast<int>(out.size()) != static_cast<int>(sg.matching_size) - sg.outside)
    throw std::logic_error("A-path extraction disagrees with matching size");
  return out;
}

bool is_apath_packing(const Multigraph& g, const std::set<Vertex>& a, const PathPacking& p) {
  std::set<Vertex> seen;
  for (const auto& path : p.paths) {
    if (path.size() < 2) return false;
    if (!a.count(path.front()) || !a.count(path.back())) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (!g.has_vertex(path[i]) || !seen.insert(path[i]).second) return false;
      if (i > 0 && i + 1 < path.size() && a.count(path[i])) return false;
      if (i > 0 && g.edges_between(path[i - 1], path[i]).empty()) return false;
    }
  }
  return true;
}

GallaiOutcome gallai_blocker_or_packing(const Multigraph& g, const std::set<Vertex>& a, int k) {
  GallaiOutcome out;
  PathPacking best = max_disjoint_apaths(g, a);
  out.packing_number = static_cast<int>(best.size());
  if (!is_apath_packing(g, a, best)) throw std::logic_error("invalid A-path packing");
  if (out.packing_number >= k + 1) {
    best.paths.resize(k + 1);
    out.has_packing = true;
    out.packing = std::move(best);
    return out;
  }

  // Greedy blocker: the min-max formula guarantees that while an A-path
  // remains, deleting one vertex or some pair lowers the packing number, so
  // at most two vertices are spent per unit of packing number.
  std::set<Vertex> blocker;
  int current = out.packing_number;
  while (current > 0) {
    Multigraph h = without(g, blocker);
    std::set<Vertex> ha = minus(a, blocker);
    std::vector<Vertex> verts = h.vertices();
    bool progressed = false;
    for (Vertex v : verts) {
      int val = apath_number(without(h, {v}), minus(ha, {v}));
      if (val < current) {
        blocker.insert(v);
        current = val;
        progressed = true;
        break;
      }
    }
    for (std::size_t i = 0; i < verts.size() && !progressed; ++i)
      for (std::size_t j = i + 1; j < verts.size() && !progressed; ++j) {
        std::set<Vertex> pair{verts[i], verts[j]};
        int val = apath_number(without(h, pair), minus(ha, pair));
        if (val < current) {
          blocker.insert(pair.begin(), pair.end());
          current = val;
          progressed = true;
        }
      }
    if (!progressed) throw std::logic_error("no vertex pair lowers the A-path number");
  }
  if (static_cast<int>(blocker.size()) > 2 * out.packing_number)
    throw std::logic_error("blocker exceeds twice the packing number");
  if (apath_number(without(g, blocker), minus(a, blocker)) != 0)
    throw std::logic_error("blocker misses an A-path");
  out.blocker = std::move(blocker);
  return out;
}

}  // namespace sfvs
