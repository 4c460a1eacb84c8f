#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfvs/multigraph.hpp"

namespace sfvs {

/// Raised when the deletion set handed to decompose leaves an S-cycle.
struct InfeasibleDeletionSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Components ("bubbles") of G - Y - S, the forest H_Y of S-edges between
/// them, and the attachments of each bubble to Y (the extra edges of H_Y^+).
struct BubbleDecomposition {
  enum class Kind { Solitary, Leaf, Inner };
  struct Link {
    int a = 0;  // a < b
    int b = 0;
    EdgeId s_edge = 0;
  };

  std::set<Vertex> deleted;
  /// Ascending vertex lists, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> bubbles;
  std::map<Vertex, int> bubble_of;
  /// Sorted by S-edge id.
  std::vector<Link> links;
  std::vector<std::vector<int>> incident_links;
  std::vector<std::set<Vertex>> attached;

  Kind kind(int bubble) const;
  int other_end(int link, int bubble) const;
};

/// Throws InfeasibleDeletionSet if g - y has an S-cycle (an S-edge inside a
/// bubble, two S-edges between one bubble pair, or a cycle in H_Y).
BubbleDecomposition decompose(const Multigraph& g, const std::set<EdgeId>& s,
                              const std::set<Vertex>& y);

/// Maximal matching of H_Y covering every inner bubble, built per tree from
/// the lowest-numbered bubble: match the root with its first child, then
/// recurse into every non-leaf child of either. Returns link indices.
std::vector<int> cover_matching(const BubbleDecomposition& dec);

struct Sighting {
  std::set<Vertex> singles;
  std::set<VertexPair> pairs;
};

/// What the link between bubbles a and b sees: vertices of Y adjacent to both
/// sides, and pairs {x, y} of distinct Y-vertices with x next to one side and
/// y next to the other.
Sighting seen_by(const BubbleDecomposition& dec, int a, int b);

/// G_z: z, one node per leaf bubble of L_z, and the vertices of the inner
/// bubbles next to L_z. S-edges of G_z are the node-to-inner edges.
struct GzGraph {
  Multigraph graph;
  std::set<EdgeId> s_edges;
  Vertex z = 0;
  std::map<Vertex, int> leaf_node_bubble;
  std::set<Vertex> leaf_nodes;
  std::set<Vertex> inner_vertices;
};

GzGraph build_gz(const Multigraph& g, const std::set<EdgeId>& s, const BubbleDecomposition& dec,
                 const std::vector<int>& unmatched_leaves, Vertex z);

struct BlockerOutcome {
  /// k+1 disjoint L_z-paths exist, i.e. a z-flower of order k+1.
  bool flower = false;
  std::set<Vertex> blocker;
};

/// z-blocker of size at most 2k inside the inner vertices of G_z and outside
/// terminals, or a report that a flower of order k+1 exists.
BlockerOutcome compute_blocker(const GzGraph& gz, const std::set<Vertex>& terminals, int k);

struct InstanceSizes {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t s_edges = 0;
  std::size_t pairs = 0;
  int budget = 0;
};

/// One rule application; rule 0 marks the |Z| shortcuts.
struct TraceEntry {
  int rule = 0;
  std::string witness;
  InstanceSizes before;
  InstanceSizes after;

  /// "rule=R witness=W V=a->b E=.. S=.. P=.. k=.."
  std::string line() const;
};

/// Sizes at the fixpoint together with the bounds they must respect.
struct FixpointMetrics {
  std::size_t z = 0, b = 0, m = 0, l = 0, p = 0, s = 0;
  int k = 0;
  std::vector<std::string> violations;

  std::size_t m_bound() const;
  std::size_t l_bound() const;
  std::size_t b_bound() const;
  std::size_t p_bound() const;
  /// 2|M| + |L| + k^2, the bound on S after finalize.
  std::size_t final_s_bound() const;
};

struct EngineOptions {
  std::uint64_t seed = 1;
  /// 0 selects a polynomial default derived from the instance.
  std::size_t max_steps = 0;
};

struct EngineResult {
  enum class Outcome { Reduced, TrivialFalse, TrivialTrue };
  Outcome outcome = Outcome::Reduced;
  PairInstance instance;
  SolutionCandidate z;
  std::vector<TraceEntry> trace;
  /// fired[r] counts applications of rule r (index 0 unused).
  std::array<int, 11> fired{};
  FixpointMetrics metrics;
};

/// Applies rules 1-10, always the lowest applicable one, recomputing the
/// decomposition, matching and blockers after every application. z must be
/// a solution of (G, S) avoiding V(S); factor, when given, certifies
/// |z| <= factor * optimum and enables the early NO answer for |z| > 8k.
EngineResult apply_rules(PairInstance inst, SolutionCandidate z, std::optional<int> factor,
                         const EngineOptions& options = {});

/// Plain instance equivalent to a pair-constrained one: each pair {x, y}
/// gets an edge x-y if none exists and one more parallel edge put into S.
Instance finalize(const PairInstance& inst);

}  // namespace sfvs
