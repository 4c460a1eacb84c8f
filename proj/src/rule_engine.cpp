#include "sfvs/rule_engine.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sfvs/flowers.hpp"
#include "sfvs/path_packing.hpp"
#include "sfvs/s_kernel.hpp"

namespace sfvs {

BubbleDecomposition::Kind BubbleDecomposition::kind(int bubble) const {
  switch (incident_links[bubble].size()) {
    case 0:
      return Kind::Solitary;
    case 1:
      return Kind::Leaf;
    default:
      return Kind::Inner;
  }
}

int BubbleDecomposition::other_end(int link, int bubble) const {
  return links[link].a == bubble ? links[link].b : links[link].a;
}

BubbleDecomposition decompose(const Multigraph& g, const std::set<EdgeId>& s,
                              const std::set<Vertex>& y) {
  BubbleDecomposition dec;
  dec.deleted = y;
  for (Vertex v : g.vertices()) {
    if (y.count(v) || dec.bubble_of.count(v)) continue;
    const int id = static_cast<int>(dec.bubbles.size());
    std::vector<Vertex> members{v};
    dec.bubble_of[v] = id;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (EdgeId e : g.incident(members[i])) {
        if (s.count(e)) continue;
        Vertex w = g.edge(e).other(members[i]);
        if (y.count(w) || dec.bubble_of.count(w)) continue;
        dec.bubble_of[w] = id;
        members.push_back(w);
      }
    std::sort(members.begin(), members.end());
    dec.bubbles.push_back(std::move(members));
  }
  const int n = static_cast<int>(dec.bubbles.size());
  dec.incident_links.resize(n);
  dec.attached.resize(n);

  std::set<std::pair<int, int>> linked_pairs;
  for (EdgeId e : s) {
    const Edge& ed = g.edge(e);
    if (y.count(ed.u) || y.count(ed.v)) continue;
    int a = dec.bubble_of.at(ed.u), b = dec.bubble_of.at(ed.v);
    if (a == b)
      throw InfeasibleDeletionSet("S-edge " + std::to_string(e) + " lies inside a bubble");
    if (a > b) std::swap(a, b);
    if (!linked_pairs.insert({a, b}).second)
      throw InfeasibleDeletionSet("two S-edges join the same pair of bubbles");
    dec.links.push_back({a, b, e});
  }
  for (std::size_t i = 0; i < dec.links.size(); ++i) {
    dec.incident_links[dec.links[i].a].push_back(static_cast<int>(i));
    dec.incident_links[dec.links[i].b].push_back(static_cast<int>(i));
  }

  // Forest check by union-find over the links.
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& link : dec.links) {
    int ra = find(link.a), rb = find(link.b);
    if (ra == rb) throw InfeasibleDeletionSet("the S-edge graph on bubbles has a cycle");
    parent[ra] = rb;
  }

  for (Vertex x : y) {
    if (!g.has_vertex(x)) continue;
    for (EdgeId e : g.incident(x)) {
      Vertex w = g.edge(e).other(x);
      auto it = dec.bubble_of.find(w);
      if (it != dec.bubble_of.end()) dec.attached[it->second].insert(x);
    }
  }
  return dec;
}

std::vector<int> cover_matching(const BubbleDecomposition& dec) {
  const int n = static_cast<int>(dec.bubbles.size());
  std::vector<int> parent_link(n, -2);
  std::vector<std::vector<std::pair<int, int>>> children(n);  // (child, link)
  std::vector<int> matched;

  std::function<void(int)> match = [&](int r) {
    if (children[r].empty()) return;
    auto [v, link] = children[r].front();
    matched.push_back(link);
    std::vector<int> next;
    for (auto [w, l] : children[v]) next.push_back(w);
    for (std::size_t i = 1; i < children[r].size(); ++i) next.push_back(children[r][i].first);
    for (int w : next)
      if (!children[w].empty()) match(w);
  };

  for (int root = 0; root < n; ++root) {
    if (parent_link[root] != -2) continue;
    parent_link[root] = -1;
    std::vector<int> order{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
      int x = order[i];
      std::vector<std::pair<int, int>> kids;
      for (int l : dec.incident_links[x]) {
        int w = dec.other_end(l, x);
        if (parent_link[w] != -2) continue;
        parent_link[w] = l;
        kids.push_back({w, l});
      }
      std::sort(kids.begin(), kids.end());
      for (auto [w, l] : kids) order.push_back(w);
      children[x] = std::move(kids);
    }
    match(root);
  }
  std::sort(matched.begin(), matched.end());
  return matched;
}

Sighting seen_by(const BubbleDecomposition& dec, int a, int b) {
  Sighting out;
  const auto& xa = dec.attached[a];
  const auto& xb = dec.attached[b];
  std::set_intersection(xa.begin(), xa.end(), xb.begin(), xb.end(),
                        std::inserter(out.singles, out.singles.end()));
  for (Vertex x : xa)
    for (Vertex y : xb)
      if (x != y) out.pairs.insert(make_vertex_pair(x, y));
  return out;
}

GzGraph build_gz(const Multigraph& g, const std::set<EdgeId>& s, const BubbleDecomposition& dec,
                 const std::vector<int>& unmatched_leaves, Vertex z) {
  GzGraph gz;
  gz.z = z;
  gz.graph.add_vertex(z);
  std::vector<int> lz;
  for (int leaf : unmatched_leaves)
    if (dec.attached[leaf].count(z)) lz.push_back(leaf);
  std::set<int> inner;
  for (int leaf : lz)
    for (int l : dec.incident_links[leaf]) inner.insert(dec.other_end(l, leaf));
  for (int b : inner)
    for (Vertex v : dec.bubbles[b]) {
      gz.inner_vertices.insert(v);
      gz.graph.add_vertex(v);
    }
  Vertex next = std::max(g.next_vertex_id(), z + 1);
  std::map<int, Vertex> node_of;
  for (int leaf : lz) {
    Vertex node = next++;
    node_of[leaf] = node;
    gz.graph.add_vertex(node);
    gz.leaf_nodes.insert(node);
    gz.leaf_node_bubble[node] = leaf;
    gz.graph.add_edge(z, node);
  }
  for (EdgeId e : s) {
    const Edge& ed = g.edge(e);
    for (auto [v, w] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
      auto bv = dec.bubble_of.find(v);
      if (bv == dec.bubble_of.end() || !node_of.count(bv->second)) continue;
      if (!gz.inner_vertices.count(w)) continue;
      gz.s_edges.insert(gz.graph.add_edge(node_of[bv->second], w));
    }
  }
  for (const auto& [e, ed] : g.edges()) {
    if (s.count(e) || ed.is_loop()) continue;
    if (gz.inner_vertices.count(ed.u) && gz.inner_vertices.count(ed.v)) gz.graph.add_edge(ed.u, ed.v);
  }
  return gz;
}

BlockerOutcome compute_blocker(const GzGraph& gz, const std::set<Vertex>& terminals, int k) {
  BlockerOutcome out;
  Multigraph h = gz.graph;
  h.remove_vertex(gz.z);
  GallaiOutcome gallai = gallai_blocker_or_packing(h, gz.leaf_nodes, k);
  if (gallai.has_packing) {
    out.flower = true;
    return out;
  }
  for (Vertex v : gallai.blocker) {
    if (gz.leaf_nodes.count(v)) {
      // A leaf node has exactly one neighbour besides z.
      auto nb = h.neighbors(v);
      if (nb.empty()) continue;
      v = nb.front();
    }
    if (terminals.count(v)) {
      // Every path through a subdivision vertex also passes its base.
      std::optional<Vertex> base;
      for (EdgeId e : h.incident(v)) {
        Vertex w = h.edge(e).other(v);
        if (!gz.s_edges.count(e) && gz.inner_vertices.count(w) && !terminals.count(w)) base = w;
      }
      if (!base) continue;
      v = *base;
    }
    out.blocker.insert(v);
  }
  if (static_cast<int>(out.blocker.size()) > 2 * k)
    throw std::logic_error("z-blocker larger than 2k");
  Multigraph rest = h;
  std::set<Vertex> a = gz.leaf_nodes;
  for (Vertex v : out.blocker) {
    if (!gz.inner_vertices.count(v) || terminals.count(v))
      throw std::logic_error("z-blocker leaves the inner non-terminal vertices");
    rest.remove_vertex(v);
  }
  if (apath_number(rest, a) != 0) throw std::logic_error("z-blocker misses an L_z-path");
  return out;
}

std::string TraceEntry::line() const {
  std::ostringstream os;
  os << "rule=" << rule << " witness=" << witness << " V=" << before.vertices << "->" << after.vertices
     << " E=" << before.edges << "->" << after.edges << " S=" << before.s_edges << "->" << after.s_edges
     << " P=" << before.pairs << "->" << after.pairs << " k=" << before.budget << "->" << after.budget;
  return os.str();
}

namespace {

std::size_t sq(std::size_t x) { return x * x; }
std::size_t nonneg(int k) { return k > 0 ? static_cast<std::size_t>(k) : 0; }

}  // namespace

std::size_t FixpointMetrics::m_bound() const {
  return (nonneg(k) + 1) * sq(z) + nonneg(k) * z;
}
std::size_t FixpointMetrics::l_bound() const {
  return (nonneg(k) + 1) * z * (b + z) + nonneg(k) * z;
}
std::size_t FixpointMetrics::b_bound() const { return 2 * nonneg(k) * z; }
std::size_t FixpointMetrics::p_bound() const { return sq(nonneg(k)); }
std::size_t FixpointMetrics::final_s_bound() const { return 2 * m + l + sq(nonneg(k)); }

namespace {

class Engine {
 public:
  Engine(PairInstance inst, SolutionCandidate z, std::optional<int> factor,
         const EngineOptions& options)
      : inst_(std::move(inst)), z_(std::move(z.deleted)), factor_(factor), options_(options) {
    Multigraph& g = inst_.base.graph;
    max_steps_ = options.max_steps;
    if (max_steps_ == 0) {
      const std::size_t kk = nonneg(inst_.base.budget) + 2;
      max_steps_ = 16 * (g.num_vertices() + g.num_edges() + 1) * kk * kk * kk + 100;
    }
  }

  EngineResult run() {
    for (std::size_t step = 0;; ++step) {
      if (step > max_steps_) throw std::logic_error("rule engine exceeded its step bound");
      if (!step_once()) break;
      if (result_.outcome != EngineResult::Outcome::Reduced) break;
    }
    result_.instance = inst_;
    result_.z.deleted = z_;
    return std::move(result_);
  }

 private:
  Multigraph& g() { return inst_.base.graph; }
  std::set<EdgeId>& s() { return inst_.base.s_edges; }
  int& k() { return inst_.base.budget; }

  InstanceSizes sizes() {
    return {g().num_vertices(), g().num_edges(), s().size(), inst_.pairs.size(), k()};
  }

  void log(int rule, const std::string& witness) {
    ++result_.fired[rule];
    result_.trace.push_back(TraceEntry{rule, witness, before_, sizes()});
  }

  void finish_false(int rule, const std::string& witness) {
    inst_ = PairInstance{canonical_false_instance(), {}};
    z_.clear();
    result_.outcome = EngineResult::Outcome::TrivialFalse;
    log(rule, witness);
  }

  void finish_true(const std::string& witness) {
    inst_ = PairInstance{canonical_true_instance(k()), {}};
    z_.clear();
    result_.outcome = EngineResult::Outcome::TrivialTrue;
    log(0, witness);
  }

  void delete_vertex(Vertex v) {
    g().remove_vertex(v);
    for (auto it = s().begin(); it != s().end();)
      it = g().has_edge(*it) ? std::next(it) : s().erase(it);
    for (auto it = inst_.pairs.begin(); it != inst_.pairs.end();)
      it = (it->first == v || it->second == v) ? inst_.pairs.erase(it) : std::next(it);
    z_.erase(v);
  }

  // Deleting a vertex that lies in every small solution.
  void take_into_solution(Vertex v) {
    delete_vertex(v);
    --k();
    factor_.reset();  // the approximation guarantee refers to the old instance
  }

  bool step_once() {
    before_ = sizes();
    // Rule 1.
    if (k() < 0) return finish_false(1, "k=" + std::to_string(k())), true;
    if (k() == 0 && has_s_cycle(g(), s())) return finish_false(1, "s-cycle-at-k=0"), true;

    bool pairs_hit = std::all_of(inst_.pairs.begin(), inst_.pairs.end(), [&](const VertexPair& p) {
      return z_.count(p.first) || z_.count(p.second);
    });
    if (static_cast<int>(z_.size()) <= k() && pairs_hit)
      return finish_true("feasible-solution-within-budget |Z|=" + std::to_string(z_.size())), true;
    if (factor_ && *factor_ <= 8 && z_.size() > 8 * nonneg(k()))
      return finish_false(0, "approximation-exceeds-8k |Z|=" + std::to_string(z_.size())), true;

    if (rule2()) return true;
    if (rule3()) return true;
    if (rule4()) return true;
    if (static_cast<std::size_t>(inst_.pairs.size()) > sq(nonneg(k())))
      return finish_false(5, "pairs=" + std::to_string(inst_.pairs.size())), true;
    if (rule6()) return true;
    return matching_rules();
  }

  bool rule2() {
    std::set<EdgeId> br = bridges(g());
    std::set<Vertex> pair_vertices;
    for (const auto& [x, y] : inst_.pairs) {
      pair_vertices.insert(x);
      pair_vertices.insert(y);
    }
    Multigraph after = g();
    for (EdgeId e : br) after.remove_edge(e);
    std::vector<std::vector<Vertex>> drop;
    for (const auto& comp : connected_components(after)) {
      bool keep = false;
      for (Vertex v : comp) {
        if (pair_vertices.count(v)) keep = true;
        for (EdgeId e : after.incident(v))
          if (s().count(e)) keep = true;
        if (keep) break;
      }
      if (!keep) drop.push_back(comp);
    }
    if (br.empty() && drop.empty()) return false;
    std::size_t removed_vertices = 0;
    for (EdgeId e : br) {
      g().remove_edge(e);
      s().erase(e);
    }
    for (const auto& comp : drop)
      for (Vertex v : comp) {
        delete_vertex(v);
        ++removed_vertices;
      }
    log(2, "bridges=" + std::to_string(br.size()) + ",vertices=" + std::to_string(removed_vertices));
    return true;
  }

  bool rule3() {
    // e in S is a bridge of (V, E \ (S \ {e})) iff its ends lie in different
    // components of G minus all of S.
    Multigraph plain = g();
    for (EdgeId e : s()) plain.remove_edge(e);
    std::map<Vertex, int> comp;
    int c = 0;
    for (const auto& members : connected_components(plain)) {
      for (Vertex v : members) comp[v] = c;
      ++c;
    }
    for (EdgeId e : s()) {
      const Edge& ed = g().edge(e);
      if (ed.is_loop() || comp[ed.u] == comp[ed.v]) continue;
      s().erase(e);
      log(3, "edge=" + std::to_string(e));
      return true;
    }
    return false;
  }

  bool rule4() {
    std::map<Vertex, int> count;
    for (const auto& [x, y] : inst_.pairs) {
      ++count[x];
      ++count[y];
    }
    for (const auto& [v, c] : count)
      if (c >= k() + 1) {
        take_into_solution(v);
        log(4, "vertex=" + std::to_string(v));
        return true;
      }
    return false;
  }

  bool rule6() {
    for (Vertex z : z_) {
      if (has_flower_of_order(g(), s(), z, k() + 1, ParityBackend::Algebraic,
                              options_.seed + 7919 * (result_.trace.size() + 1) + z)) {
        take_into_solution(z);
        log(6, "z=" + std::to_string(z));
        return true;
      }
    }
    return false;
  }

  // Pairs {x,y} not yet constrained with at least k+2 witnessing links, whose
  // bubbles must be pairwise distinct.
  bool add_pair_if_witnessed(int rule, const std::map<VertexPair, std::vector<std::pair<int, int>>>& witnesses) {
    for (const auto& [pair, sides] : witnesses) {
      if (static_cast<int>(sides.size()) < k() + 2 || inst_.pairs.count(pair)) continue;
      std::set<int> first, second;
      for (auto [a, b] : sides)
        if (!first.insert(a).second || !second.insert(b).second)
          throw std::logic_error("witnessing bubble links are not disjoint");
      inst_.pairs.insert(pair);
      log(rule, "pair=" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                    ",witnesses=" + std::to_string(sides.size()));
      return true;
    }
    return false;
  }

  bool irrelevant(const Sighting& seen) const {
    if (!seen.singles.empty()) return false;
    return std::all_of(seen.pairs.begin(), seen.pairs.end(),
                       [&](const VertexPair& p) { return inst_.pairs.count(p) != 0; });
  }

  bool matching_rules() {
    BubbleDecomposition dec = decompose(g(), s(), z_);
    std::vector<int> matching = cover_matching(dec);

    // Rule 7.
    std::map<VertexPair, std::vector<std::pair<int, int>>> witnesses;
    std::vector<Sighting> sightings;
    std::set<int> covered;
    for (int l : matching) {
      const auto& link = dec.links[l];
      covered.insert(link.a);
      covered.insert(link.b);
      sightings.push_back(seen_by(dec, link.a, link.b));
      for (const auto& p : sightings.back().pairs) {
        // Orient each witness so that the side next to p.first comes first.
        bool forward = dec.attached[link.a].count(p.first) && dec.attached[link.b].count(p.second);
        witnesses[p].push_back(forward ? std::pair{link.a, link.b} : std::pair{link.b, link.a});
      }
    }
    for (int b = 0; b < static_cast<int>(dec.bubbles.size()); ++b)
      if (dec.kind(b) == BubbleDecomposition::Kind::Inner && !covered.count(b))
        throw std::logic_error("matching misses an inner bubble");
    if (add_pair_if_witnessed(7, witnesses)) return true;

    // Rule 8.
    for (std::size_t i = 0; i < matching.size(); ++i)
      if (irrelevant(sightings[i])) {
        EdgeId e = dec.links[matching[i]].s_edge;
        s().erase(e);
        log(8, "edge=" + std::to_string(e));
        return true;
      }

    std::vector<int> unmatched;
    for (int b = 0; b < static_cast<int>(dec.bubbles.size()); ++b)
      if (dec.kind(b) == BubbleDecomposition::Kind::Leaf && !covered.count(b)) unmatched.push_back(b);

    // Blockers; a flower found in G_z lifts to G, so Rule 6 applies to z.
    const std::set<Vertex> terminals = inst_.base.terminals();
    std::set<Vertex> blocker_union;
    for (Vertex z : z_) {
      GzGraph gz = build_gz(g(), s(), dec, unmatched, z);
      BlockerOutcome bo = compute_blocker(gz, terminals, k());
      if (bo.flower) {
        take_into_solution(z);
        log(6, "z=" + std::to_string(z) + ",via=G_z");
        return true;
      }
      blocker_union.insert(bo.blocker.begin(), bo.blocker.end());
    }

    std::set<Vertex> y = z_;
    y.insert(blocker_union.begin(), blocker_union.end());
    BubbleDecomposition outer = decompose(g(), s(), y);

    for (const auto& bubble : outer.bubbles)
      for (Vertex v : bubble)
        if (dec.bubble_of.at(v) != dec.bubble_of.at(bubble.front()))
          throw std::logic_error("a bubble after adding blockers spans two bubbles of Z");

    // Each unmatched leaf bubble survives unchanged as a leaf of H_{Z+B},
    // sees no blocker vertex, and leaves sharing a neighbour share no z.
    struct LeafLink {
      int k_bubble;
      int j_bubble;
      EdgeId s_edge;
    };
    std::vector<LeafLink> leaf_links;
    std::map<int, std::vector<int>> leaves_at;
    for (int leaf : unmatched) {
      int j = outer.bubble_of.at(dec.bubbles[leaf].front());
      if (outer.bubbles[j] != dec.bubbles[leaf] || outer.kind(j) != BubbleDecomposition::Kind::Leaf)
        throw std::logic_error("unmatched leaf bubble changed after adding blockers");
      for (Vertex x : outer.attached[j])
        if (!z_.count(x)) throw std::logic_error("unmatched leaf bubble sees a blocker vertex");
      int link = outer.incident_links[j].front();
      int kb = outer.other_end(link, j);
      leaf_links.push_back({kb, j, outer.links[link].s_edge});
      leaves_at[kb].push_back(j);
    }
    for (const auto& [kb, js] : leaves_at)
      for (std::size_t i = 0; i < js.size(); ++i)
        for (std::size_t j = i + 1; j < js.size(); ++j) {
          const auto& a = outer.attached[js[i]];
          const auto& b = outer.attached[js[j]];
          for (Vertex x : a)
            if (b.count(x)) throw std::logic_error("two unmatched leaves at one bubble share a z");
        }
    std::sort(leaf_links.begin(), leaf_links.end(),
              [](const LeafLink& a, const LeafLink& b) { return a.s_edge < b.s_edge; });

    // Rule 9: ordered pairs (x next to K, y in Z next to J).
    std::map<std::pair<Vertex, Vertex>, std::vector<std::pair<int, int>>> ordered;
    for (const auto& ll : leaf_links)
      for (Vertex x : outer.attached[ll.k_bubble])
        for (Vertex yv : outer.attached[ll.j_bubble])
          if (x != yv && z_.count(yv)) ordered[{x, yv}].push_back({ll.k_bubble, ll.j_bubble});
    std::map<VertexPair, std::vector<std::pair<int, int>>> rule9;
    for (const auto& [xy, sides] : ordered) {
      VertexPair p = make_vertex_pair(xy.first, xy.second);
      if (static_cast<int>(sides.size()) >= k() + 2 && !inst_.pairs.count(p) && !rule9.count(p))
        rule9[p] = sides;
    }
    if (add_pair_if_witnessed(9, rule9)) return true;

    // Rule 10.
    for (const auto& ll : leaf_links)
      if (irrelevant(seen_by(outer, ll.k_bubble, ll.j_bubble))) {
        s().erase(ll.s_edge);
        log(10, "edge=" + std::to_string(ll.s_edge));
        return true;
      }

    FixpointMetrics& m = result_.metrics;
    m.z = z_.size();
    m.b = blocker_union.size();
    m.m = matching.size();
    m.l = unmatched.size();
    m.p = inst_.pairs.size();
    m.s = s().size();
    m.k = k();
    if (m.p > m.p_bound()) m.violations.push_back("pairs");
    if (m.m > m.m_bound()) m.violations.push_back("matching");
    if (m.l > m.l_bound()) m.violations.push_back("unmatched-leaves");
    if (m.b > m.b_bound()) m.violations.push_back("blockers");
    if (m.s > 2 * m.m + m.l) m.violations.push_back("s-edges");
    return false;
  }

  PairInstance inst_;
  std::set<Vertex> z_;
  std::optional<int> factor_;
  EngineOptions options_;
  std::size_t max_steps_ = 0;
  InstanceSizes before_;
  EngineResult result_;
};

}  // namespace

EngineResult apply_rules(PairInstance inst, SolutionCandidate z, std::optional<int> factor,
                         const EngineOptions& options) {
  for (Vertex v : z.deleted)
    if (!inst.base.graph.has_vertex(v)) throw std::invalid_argument("Z contains a non-vertex");
  if (!is_solution(inst.base, z)) throw std::invalid_argument("Z is not a solution");
  const std::set<Vertex> terminals = inst.base.terminals();
  for (Vertex v : z.deleted)
    if (terminals.count(v)) throw std::invalid_argument("Z meets V(S)");
  return Engine(std::move(inst), std::move(z), factor, options).run();
}

Instance finalize(const PairInstance& inst) {
  Instance out = inst.base;
  for (const auto& [x, y] : inst.pairs) {
    bool has_plain = false;
    for (EdgeId e : out.graph.edges_between(x, y))
      if (!out.s_edges.count(e)) has_plain = true;
    if (!has_plain) out.graph.add_edge(x, y);
    out.s_edges.insert(out.graph.add_edge(x, y));
  }
  return out;
}

}  // namespace sfvs
