#pragma once

#include <set>
#include <vector>

#include "sfvs/digraph.hpp"
#include "sfvs/multigraph.hpp"

namespace sfvs {

/// A list of paths, each a vertex sequence with consecutive vertices adjacent.
struct PathPacking {
  std::vector<std::vector<Vertex>> paths;
  std::size_t size() const { return paths.size(); }
};

/// Maximum family of vertex-disjoint paths starting in s and ending in t.
/// A vertex of s ∩ t may form a path of length zero.
PathPacking max_vertex_disjoint_st_paths(const Digraph& g, const std::set<Vertex>& s,
                                         const std::set<Vertex>& t);
PathPacking max_vertex_disjoint_st_paths(const Multigraph& g, const std::set<Vertex>& s,
                                         const std::set<Vertex>& t);

/// Size of a maximum family of vertex-disjoint A-paths (paths with two distinct
/// ends in a and no inner vertex in a).
int apath_number(const Multigraph& g, const std::set<Vertex>& a);

/// A maximum family of vertex-disjoint A-paths.
PathPacking max_disjoint_apaths(const Multigraph& g, const std::set<Vertex>& a);

struct GallaiOutcome {
  bool has_packing = false;
  /// k+1 disjoint A-paths when has_packing.
  PathPacking packing;
  /// Otherwise a set meeting every A-path, of size at most 2 * packing_number.
  std::set<Vertex> blocker;
  int packing_number = 0;
};

/// Either k+1 vertex-disjoint A-paths or a blocker of size at most twice the
/// maximum packing. Both certificates are checked before returning.
GallaiOutcome gallai_blocker_or_packing(const Multigraph& g, const std::set<Vertex>& a, int k);

/// Structural check: paths are simple, pairwise vertex-disjoint, consecutive
/// vertices adjacent, ends distinct members of a, inner vertices outside a.
bool is_apath_packing(const Multigraph& g, const std::set<Vertex>& a, const PathPacking& p);

}  // namespace sfvs
