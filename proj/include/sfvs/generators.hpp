#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "sfvs/multigraph.hpp"

namespace sfvs {

enum class GenModel { Gnm, BubbleForest };

struct GenParams {
  int n = 10;
  int m = 15;
  int s = 3;
  int k = 2;
  std::uint64_t seed = 1;
  GenModel model = GenModel::Gnm;
};

struct Generated {
  PairInstance instance;
  /// Feasible solution planted by the bubble-forest model, empty for gnm.
  std::set<Vertex> planted_z;
  /// Name of the planted motif ("gnm" for the uniform model).
  std::string motif;
};

/// gnm: vertices 1..n, m edges with independently uniform ends (loops and
/// parallel edges possible), s of them chosen uniformly as S-edges.
///
/// bubble-forest: a motif around planted hubs Z, the rest of the n vertices
/// hung off it as pendant trees with up to s S-edges among the tree edges; m
/// is not used. Motifs, picked at random among those fitting n and k:
///   flower        hub z with k+1 S-triangles plus k guard S-triangles;
///                 rule 6 fires on z, and for k = 1 rule 1 follows
///   pair          k+2 S-edges between neighbours of hubs x and y plus
///                 k-1 guards; rule 7 adds {x,y}, rule 8 clears the S-edges
///   pair-hub      pair constraints {x,y_1..y_k+1} plus k guards; rule 4
///                 deletes x and rule 1 follows
///   double-pair   (k = 1) two disjoint pair motifs; rule 5 answers NO
///   stars         (k = 2) four inner bubbles, each matched to a leaf seeing
///                 one of two hubs and holding an unmatched leaf next to y;
///                 rule 9 adds {x,y}, rule 10 clears the S-edges
///   guards        fallback: one S-triangle per hub
/// Pendant trees make rule 2 fire. Throws std::invalid_argument on
/// inconsistent parameters.
Generated generate(const GenParams& params);

}  // namespace sfvs
