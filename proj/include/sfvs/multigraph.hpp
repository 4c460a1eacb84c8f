#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace sfvs {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool is_loop() const { return u == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph with loops. Vertex and edge identifiers are opaque
/// integers that stay stable while the graph is mutated.
class Multigraph {
 public:
  Vertex add_vertex();
  void add_vertex(Vertex v);
  EdgeId add_edge(Vertex u, Vertex v);
  void add_edge_with_id(EdgeId id, Vertex u, Vertex v);
  /// Removes v together with every incident edge.
  void remove_vertex(Vertex v);
  void remove_edge(EdgeId e);

  bool has_vertex(Vertex v) const { return incidence_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
  const Edge& edge(EdgeId e) const;
  std::size_t num_vertices() const { return incidence_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::vector<Vertex> vertices() const;
  std::vector<EdgeId> edge_ids() const;
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  /// Incident edge ids in insertion order; a loop is listed once.
  const std::vector<EdgeId>& incident(Vertex v) const;
  /// Distinct neighbours other than v itself, ascending.
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::vector<EdgeId> edges_between(Vertex u, Vertex v) const;

  Vertex next_vertex_id() const { return next_vertex_; }
  EdgeId next_edge_id() const { return next_edge_; }

  bool operator==(const Multigraph& other) const {
    return edges_ == other.edges_ && vertices() == other.vertices();
  }

 private:
  std::map<Vertex, std::vector<EdgeId>> incidence_;
  std::map<EdgeId, Edge> edges_;
  Vertex next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

/// Ordered vertex pair with first < second; used for pair-constraints.
using VertexPair = std::pair<Vertex, Vertex>;
VertexPair make_vertex_pair(Vertex a, Vertex b);

struct Instance {
  Multigraph graph;
  std::set<EdgeId> s_edges;
  int budget = 0;

  /// Endpoints of the S-edges.
  std::set<Vertex> terminals() const;
  bool operator==(const Instance&) const = default;
};

struct PairInstance {
  Instance base;
  std::set<VertexPair> pairs;

  bool operator==(const PairInstance&) const = default;
};

struct SolutionCandidate {
  std::set<Vertex> deleted;
};

/// True iff g - removed contains a cycle through at least one S-edge.
/// Loops in S and parallel pairs with an S-member count as cycles.
bool has_s_cycle(const Multigraph& g, const std::set<EdgeId>& s_edges,
                 const std::set<Vertex>& removed = {});

/// A shortest S-cycle of g - removed as a vertex sequence, or empty.
std::vector<Vertex> find_short_s_cycle(const Multigraph& g,
                                       const std::set<EdgeId>& s_edges,
                                       const std::set<Vertex>& removed = {});

bool is_solution(const Instance& inst, const SolutionCandidate& cand);
bool is_solution(const PairInstance& inst, const SolutionCandidate& cand);

struct NormalizedInstance {
  Instance instance;
  /// Every vertex of the output mapped to the input vertex it stands for;
  /// subdivision vertices map to the endpoint they were split from.
  std::map<Vertex, Vertex> origin;
  /// Vertices deleted because they carried an S-loop; part of every solution.
  std::set<Vertex> forced;
};

/// Drops S-loop vertices (budget decremented per vertex), drops remaining
/// loops, trims parallel edges, and subdivides every S-edge twice so that
/// S-endpoints have degree two.
NormalizedInstance normalize(const Instance& inst);

/// Maps a solution of a normalized instance back to the input instance.
SolutionCandidate lift_solution(const NormalizedInstance& norm,
                                const SolutionCandidate& cand);

/// Graph on w containing g[w] plus an edge {u,v} for each pair joined in g by
/// a path whose internal vertices avoid w. An edge is only added when g[w] has
/// no non-S edge between u and v, so no loops and no redundant parallels arise.
Multigraph torso(const Multigraph& g, const std::set<Vertex>& w,
                 const std::set<EdgeId>& s_edges = {});

std::set<EdgeId> bridges(const Multigraph& g);

/// Connected components as ascending vertex lists, ordered by first vertex.
std::vector<std::vector<Vertex>> connected_components(const Multigraph& g);

Multigraph induced_subgraph(const Multigraph& g, const std::set<Vertex>& keep);

}  // namespace sfvs
