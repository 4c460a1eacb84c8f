#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "sfvs/digraph.hpp"
#include "sfvs/field.hpp"
#include "sfvs/multigraph.hpp"

namespace sfvs {

struct GammoidSpec {
  Digraph graph;
  std::set<Vertex> sources;
  /// Ground elements in column order.
  std::vector<Vertex> ground;
};

/// Linear representation: column j of matrix stands for labels[j].
struct MatroidRep {
  FieldMatrix matrix;
  std::vector<Vertex> labels;
  int rank = 0;

  int column_of(Vertex label) const;
  int rank_of(const std::vector<Vertex>& subset) const;
};

/// True iff t can be reached from the sources by |t| vertex-disjoint paths.
bool linked(const GammoidSpec& spec, const std::set<Vertex>& t);
/// Size of a largest linked subset of t.
int linked_rank(const GammoidSpec& spec, const std::set<Vertex>& t);

/// Random representation of the gammoid: the transversal matroid of the sets
/// {v} + in-neighbours(v), v outside the sources, is dualized and restricted
/// to the ground set. Correct with probability at least 1 - n^3 / p.
MatroidRep represent(const GammoidSpec& spec, std::uint64_t seed);

struct SinkCopies {
  Digraph graph;
  /// v -> v' and v -> v''; both copies receive arcs only.
  std::map<Vertex, Vertex> first;
  std::map<Vertex, Vertex> second;
};

/// Digraph of g minus excluded_edges with two sink-only copies per vertex.
/// Copy ids are fresh, starting after g.next_vertex_id().
SinkCopies with_sink_copies(const Multigraph& g, const std::set<EdgeId>& excluded_edges);

/// Block-diagonal representation; labels must be disjoint.
MatroidRep direct_sum(const MatroidRep& a, const MatroidRep& b);

/// Uniform matroid of the given rank on labels, as a Vandermonde matrix on
/// the points 1, 2, ..., |labels|.
MatroidRep uniform_rep(const std::vector<Vertex>& labels, int rank);

}  // namespace sfvs
