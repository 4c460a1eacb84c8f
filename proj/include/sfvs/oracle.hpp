#pragma once

#include <optional>
#include <set>
#include <stdexcept>

#include "sfvs/multigraph.hpp"

namespace sfvs {

/// Raised when an exact computation is asked to work beyond its size cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverLimits {
  int max_vertices = 25;
  int max_k = 6;
};

struct SolveResult {
  /// A solution of size at most max_k exists.
  bool feasible = false;
  /// Minimum solution size when feasible.
  int optimum = -1;
  SolutionCandidate witness;
};

/// Minimum solution by iterative deepening over branchings on a shortest
/// S-cycle (or an unhit pair). Throws CapExceeded above the limits.
SolveResult solve_exact(const PairInstance& inst, int max_k, const SolverLimits& limits = {});
SolveResult solve_exact(const Instance& inst, int max_k, const SolverLimits& limits = {});

/// YES/NO for the decision question "is there a solution of size <= budget".
/// A negative budget is always NO.
bool decide(const PairInstance& inst, const SolverLimits& limits = {});
bool decide(const Instance& inst, const SolverLimits& limits = {});

struct FeasibleSolution {
  SolutionCandidate z;
  /// Certified approximation factor; 1 when the solution is optimal.
  std::optional<int> factor;
};

/// Feasible solution avoiding V(S): optimal among such solutions when the
/// search stays within limits, otherwise the greedy cover.
FeasibleSolution feasible_z(const Instance& inst, const SolverLimits& limits = {});

/// One non-terminal vertex next to each S-edge still on an S-cycle, pruned to
/// an inclusion-minimal solution. Disjoint from V(S). Throws
/// std::invalid_argument if some S-cycle lies entirely inside V(S).
SolutionCandidate greedy_z(const Instance& inst);

/// Maximum order of a z-flower by exhaustive enumeration of S-cycles through
/// z. Throws CapExceeded on graphs with more than 20 vertices.
int brute_force_flower(const Multigraph& g, const std::set<EdgeId>& s, Vertex z);

}  // namespace sfvs
