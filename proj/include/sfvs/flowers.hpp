#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "sfvs/multigraph.hpp"

namespace sfvs {

/// A cycle through the flower center. vertices[0] is the center and
/// edges[i] joins vertices[i] and vertices[(i+1) % size].
struct Cycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

struct Flower {
  Vertex center = 0;
  std::vector<Cycle> cycles;
  std::size_t order() const { return cycles.size(); }
};

enum class ParityBackend {
  /// Randomized rank of a skew-symmetric matrix, with pairs extracted by
  /// self-reduction; falls back to exhaustive search if certification fails.
  Algebraic,
  /// Search over sets of S-pairs, each checked by a disjoint-paths oracle.
  Exhaustive,
};

/// A z-flower of maximum order: S-cycles through z that pairwise share only z.
Flower max_flower(const Multigraph& g, const std::set<EdgeId>& s, Vertex z,
                  ParityBackend backend = ParityBackend::Algebraic, std::uint64_t seed = 1);

bool has_flower_of_order(const Multigraph& g, const std::set<EdgeId>& s, Vertex z, int t,
                         ParityBackend backend = ParityBackend::Algebraic,
                         std::uint64_t seed = 1);

/// Checks that every cycle is a closed walk through the center with distinct
/// vertices and at least one S-edge, and that the cycles share only the center.
bool is_valid_flower(const Multigraph& g, const std::set<EdgeId>& s, const Flower& f);

/// Size of the largest set of S-pairs whose endpoints are linked to the
/// neighbours of z in the auxiliary graph, by exhaustive search. Exposed for
/// the parity/flower correspondence tests.
int exhaustive_parity_order(const Multigraph& g, const std::set<EdgeId>& s, Vertex z);

}  // namespace sfvs
