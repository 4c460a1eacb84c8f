#pragma once

#include <cstdint>
#include <set>

#include "sfvs/multigraph.hpp"

namespace sfvs {

/// Empty graph, no S-edges, the given non-negative budget.
Instance canonical_true_instance(int budget);
/// One vertex with an S-loop and budget 0.
Instance canonical_false_instance();

struct KernelReport {
  Instance output;
  std::set<Vertex> kept;
  std::size_t terminals = 0;
  std::size_t family_before = 0;
  std::size_t family_after = 0;
  std::uint64_t seed = 0;
  /// Set when the answer was decided without building matroids.
  bool shortcut = false;

  /// C(|T|,2) * k + |T|.
  std::size_t vertex_bound() const;
};

/// Shrinks a normalized instance to at most C(|T|,2) * k + |T| vertices,
/// T = V(S): keeps T and the origins of a representative family of vertex
/// triples in the gammoid of G - S with sink-only copies (sources T) summed
/// with a uniform matroid of rank k, then returns the torso on the kept set.
/// Correct with probability at least 1 - n^3 / p over the seed.
KernelReport kernelize_by_s(const Instance& inst, std::uint64_t seed);

}  // namespace sfvs
