#pragma once

#include <vector>

#include "sfvs/gammoid.hpp"

namespace sfvs {

/// Three ground elements of a block-diagonal representation: first and
/// second from the upper block, hat from the lower block.
struct Triple {
  Vertex origin = 0;
  Vertex first = 0;
  Vertex second = 0;
  Vertex hat = 0;
  bool operator==(const Triple&) const = default;
};

struct RepresentativeResult {
  std::vector<Triple> kept;
  /// Triples that are dependent on their own and were dropped.
  int dependent = 0;
};

/// A (d1 + d2 - 3)-representative subfamily of at most C(d1,2) * d2 triples:
/// triples are processed by ascending origin and kept when their wedge
/// coordinates are independent of those kept earlier. rep must be block
/// diagonal with an upper block of d1 rows and a lower block of d2 rows.
/// Throws std::invalid_argument when a triple violates the block layout.
RepresentativeResult representative_subset(const MatroidRep& rep, int d1, int d2,
                                           std::vector<Triple> family);

}  // namespace sfvs
