#include "sfvs/gammoid.hpp"

#include <random>
#include <stdexcept>

#include "sfvs/path_packing.hpp"

namespace sfvs {

int MatroidRep::column_of(Vertex label) const {
  for (std::size_t j = 0; j < labels.size(); ++j)
    if (labels[j] == label) return static_cast<int>(j);
  throw std::out_of_range("label not in ground set");
}

int MatroidRep::rank_of(const std::vector<Vertex>& subset) const {
  std::vector<int> cols;
  cols.reserve(subset.size());
  for (Vertex v : subset) cols.push_back(column_of(v));
  return rank_of_columns(matrix, cols);
}

int linked_rank(const GammoidSpec& spec, const std::set<Vertex>& t) {
  return static_cast<int>(max_vertex_disjoint_st_paths(spec.graph, spec.sources, t).size());
}

bool linked(const GammoidSpec& spec, const std::set<Vertex>& t) {
  return linked_rank(spec, t) == static_cast<int>(t.size());
}

MatroidRep represent(const GammoidSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> verts(spec.graph.vertices.begin(), spec.graph.vertices.end());
  std::map<Vertex, int> col;
  for (std::size_t i = 0; i < verts.size(); ++i) col[verts[i]] = static_cast<int>(i);
  std::map<Vertex, int> row;
  for (Vertex v : verts)
    if (!spec.sources.count(v)) row.emplace(v, static_cast<int>(row.size()));

  FieldMatrix transversal(static_cast<int>(row.size()), static_cast<int>(verts.size()));
  for (const auto& [v, r] : row) transversal.at(r, col[v]) = Fp::random_nonzero(rng);
  for (const auto& [u, v] : spec.graph.arcs) {
    auto it = row.find(v);
    if (it == row.end() || u == v) continue;
    Fp& entry = transversal.at(it->second, col.at(u));
    if (entry.is_zero()) entry = Fp::random_nonzero(rng);
  }

  FieldMatrix full;
  if (row.empty()) {
    full = FieldMatrix::identity(static_cast<int>(verts.size()));
  } else {
    full = dualize(transversal);
  }
  std::vector<int> ground_cols;
  ground_cols.reserve(spec.ground.size());
  for (Vertex v : spec.ground) ground_cols.push_back(col.at(v));

  MatroidRep rep;
  rep.matrix = full.select_columns(ground_cols);
  rep.labels = spec.ground;
  rep.rank = rank(rep.matrix);
  return rep;
}

SinkCopies with_sink_copies(const Multigraph& g, const std::set<EdgeId>& excluded_edges) {
  SinkCopies out;
  Vertex next = g.next_vertex_id();
  for (Vertex v : g.vertices()) {
    out.graph.add_vertex(v);
    out.first[v] = next++;
    out.second[v] = next++;
    out.graph.add_vertex(out.first[v]);
    out.graph.add_vertex(out.second[v]);
  }
  for (const auto& [id, e] : g.edges()) {
    if (e.is_loop() || excluded_edges.count(id)) continue;
    out.graph.add_arc(e.u, e.v);
    out.graph.add_arc(e.v, e.u);
    out.graph.add_arc(e.u, out.first[e.v]);
    out.graph.add_arc(e.u, out.second[e.v]);
    out.graph.add_arc(e.v, out.first[e.u]);
    out.graph.add_arc(e.v, out.second[e.u]);
  }
  return out;
}

MatroidRep direct_sum(const MatroidRep& a, const MatroidRep& b) {
  std::set<Vertex> seen(a.labels.begin(), a.labels.end());
  for (Vertex v : b.labels)
    if (seen.count(v)) throw std::invalid_argument("direct_sum: overlapping labels");
  const int ra = a.matrix.rows(), rb = b.matrix.rows();
  const int ca = a.matrix.cols(), cb = b.matrix.cols();
  MatroidRep out;
  out.matrix = FieldMatrix(ra + rb, ca + cb);
  for (int r = 0; r < ra; ++r)
    for (int c = 0; c < ca; ++c) out.matrix.at(r, c) = a.matrix.at(r, c);
  for (int r = 0; r < rb; ++r)
    for (int c = 0; c < cb; ++c) out.matrix.at(ra + r, ca + c) = b.matrix.at(r, c);
  out.labels = a.labels;
  out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
  out.rank = a.rank + b.rank;
  return out;
}

MatroidRep uniform_rep(const std::vector<Vertex>& labels, int rank) {
  const int n = static_cast<int>(labels.size());
  if (rank < 0 || rank > n) throw std::invalid_argument("uniform_rep: rank out of range");
  MatroidRep out;
  out.matrix = FieldMatrix(rank, n);
  for (int c = 0; c < n; ++c) {
    Fp x(static_cast<std::uint64_t>(c + 1)), power(1);
    for (int r = 0; r < rank; ++r) {
      out.matrix.at(r, c) = power;
      power *= x;
    }
  }
  out.labels = labels;
  out.rank = rank;
  return out;
}

}  // namespace sfvs
