#include "sfvs/generators.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace sfvs {

namespace {

struct Motif {
  std::string name;
  int size;
  std::function<void()> build;
};

class ForestBuilder {
 public:
  explicit ForestBuilder(Generated& out) : out_(out) {}

  Vertex vertex() {
    Vertex v = ++last_;
    graph().add_vertex(v);
    return v;
  }
  Vertex hub() {
    Vertex v = vertex();
    out_.planted_z.insert(v);
    return v;
  }
  void plain(Vertex u, Vertex v) { graph().add_edge(u, v); }
  void s(Vertex u, Vertex v) { out_.instance.base.s_edges.insert(graph().add_edge(u, v)); }
  Vertex last() const { return last_; }

  // Hub w on a triangle w-u-v with S-edge u-v.
  void guard() {
    Vertex w = hub(), u = vertex(), v = vertex();
    plain(w, u);
    plain(w, v);
    s(u, v);
  }

  void flower(int petals) {
    Vertex z = hub();
    for (int i = 0; i < petals; ++i) {
      Vertex a = vertex(), b = vertex();
      plain(z, a);
      plain(z, b);
      s(a, b);
    }
  }

  // Hubs x, y joined by a plain edge; each link is x-a, a-b in S, b-y.
  void pair(Vertex x, Vertex y, int links) {
    plain(x, y);
    for (int i = 0; i < links; ++i) {
      Vertex a = vertex(), b = vertex();
      plain(x, a);
      s(a, b);
      plain(b, y);
    }
  }

  // Four stars c - p, c - q (both S) for k = 2. c sees x, p sees h1 or h2,
  // q sees y; the plain path x-h1-h2-y keeps every S-edge off a bridge while
  // no hub carries a flower of order 3. p < q makes c-p the matched link.
  void stars() {
    Vertex x = hub(), y = hub(), h1 = hub(), h2 = hub();
    plain(x, h1);
    plain(h1, h2);
    plain(h2, y);
    for (int i = 0; i < 4; ++i) {
      Vertex c = vertex(), p = vertex(), q = vertex();
      plain(x, c);
      s(c, p);
      s(c, q);
      plain(p, i < 2 ? h1 : h2);
      plain(q, y);
    }
  }

 private:
  Multigraph& graph() { return out_.instance.base.graph; }
  Generated& out_;
  Vertex last_ = 0;
};

Generated gnm(const GenParams& p, std::mt19937_64& rng) {
  Generated out;
  out.motif = "gnm";
  Multigraph& g = out.instance.base.graph;
  for (Vertex v = 1; v <= p.n; ++v) g.add_vertex(v);
  std::uniform_int_distribution<Vertex> pick(1, p.n);
  std::vector<EdgeId> ids;
  for (int i = 0; i < p.m; ++i) {
    Vertex u = pick(rng), v = pick(rng);
    ids.push_back(g.add_edge(u, v));
  }
  std::shuffle(ids.begin(), ids.end(), rng);
  for (int i = 0; i < p.s; ++i) out.instance.base.s_edges.insert(ids[i]);
  return out;
}

Generated bubble_forest(const GenParams& p, std::mt19937_64& rng) {
  Generated out;
  ForestBuilder b(out);
  const int k = p.k;
  std::vector<Motif> motifs;
  if (k >= 1) {
    motifs.push_back({"flower", 1 + 2 * (k + 1) + 3 * k, [&] {
                        b.flower(k + 1);
                        for (int i = 0; i < k; ++i) b.guard();
                      }});
    motifs.push_back({"pair", 2 + 2 * (k + 2) + 3 * (k - 1), [&] {
                        Vertex x = b.hub(), y = b.hub();
                        b.pair(x, y, k + 2);
                        for (int i = 0; i < k - 1; ++i) b.guard();
                      }});
  }
  if (k == 1) {
    motifs.push_back({"double-pair", 16, [&] {
                        Vertex x1 = b.hub(), y1 = b.hub();
                        b.pair(x1, y1, 3);
                        Vertex x2 = b.hub(), y2 = b.hub();
                        b.pair(x2, y2, 3);
                      }});
  }
  if (k >= 1)
    motifs.push_back({"pair-hub", 4 * k + 2, [&] {
                        Vertex x = b.vertex();
                        for (int i = 0; i <= k; ++i) {
                          Vertex y = b.vertex();
                          b.plain(x, y);
                          out.instance.pairs.insert(make_vertex_pair(x, y));
                        }
                        for (int i = 0; i < k; ++i) b.guard();
                      }});
  if (k == 2) motifs.push_back({"stars", 16, [&] { b.stars(); }});

  std::vector<const Motif*> fitting;
  for (const auto& m : motifs)
    if (m.size <= p.n) fitting.push_back(&m);
  if (fitting.empty()) {
    out.motif = "guards";
    for (int i = 0; i < p.n / 3; ++i) b.guard();
  } else {
    const Motif* m = fitting[std::uniform_int_distribution<std::size_t>(0, fitting.size() - 1)(rng)];
    out.motif = m->name;
    m->build();
  }

  // Pendant trees on the remaining vertices.
  std::vector<std::pair<Vertex, Vertex>> tree_edges;
  while (b.last() < p.n) {
    Vertex parent = b.last() == 0 ? 0 : std::uniform_int_distribution<Vertex>(1, b.last())(rng);
    Vertex v = b.vertex();
    if (parent != 0) tree_edges.push_back({parent, v});
  }
  std::shuffle(tree_edges.begin(), tree_edges.end(), rng);
  for (std::size_t i = 0; i < tree_edges.size(); ++i) {
    auto [u, v] = tree_edges[i];
    if (static_cast<int>(i) < p.s) {
      b.s(u, v);
    } else {
      b.plain(u, v);
    }
  }
  return out;
}

}  // namespace

Generated generate(const GenParams& p) {
  if (p.n < 0 || p.m < 0 || p.s < 0) throw std::invalid_argument("n, m and s must be non-negative");
  if (p.model == GenModel::Gnm) {
    if (p.s > p.m) throw std::invalid_argument("s exceeds m");
    if (p.m > 0 && p.n == 0) throw std::invalid_argument("edges need at least one vertex");
  }
  std::mt19937_64 rng(p.seed);
  Generated out = p.model == GenModel::Gnm ? gnm(p, rng) : bubble_forest(p, rng);
  out.instance.base.budget = p.k;
  return out;
}

}  // namespace sfvs
