#pragma once

#include <set>
#include <utility>
#include <vector>

#include "sfvs/multigraph.hpp"

namespace sfvs {

/// Directed graph on opaque vertex ids; parallel arcs are allowed.
struct Digraph {
  std::set<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> arcs;

  void add_vertex(Vertex v) { vertices.insert(v); }
  void add_arc(Vertex from, Vertex to) { arcs.emplace_back(from, to); }
  bool operator==(const Digraph&) const = default;
};

/// Both orientations of every non-loop edge.
Digraph to_digraph(const Multigraph& g);

}  // namespace sfvs
