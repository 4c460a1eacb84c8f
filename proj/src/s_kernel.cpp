#include "sfvs/s_kernel.hpp"

#include "sfvs/gammoid.hpp"
#include "sfvs/rep_sets.hpp"

namespace sfvs {

Instance canonical_true_instance(int budget) {
  Instance out;
  out.budget = budget;
  return out;
}

Instance canonical_false_instance() {
  Instance out;
  Vertex x = out.graph.add_vertex();
  out.s_edges.insert(out.graph.add_edge(x, x));
  out.budget = 0;
  return out;
}

std::size_t KernelReport::vertex_bound() const {
  const std::size_t t = terminals;
  const std::size_t k = output.budget > 0 ? static_cast<std::size_t>(output.budget) : 0;
  return t * (t > 0 ? t - 1 : 0) / 2 * k + t;
}

KernelReport kernelize_by_s(const Instance& inst, std::uint64_t seed) {
  KernelReport rep;
  rep.seed = seed;
  const std::set<Vertex> terminals = inst.terminals();
  rep.terminals = terminals.size();
  if (inst.budget < 0) {
    rep.output = canonical_false_instance();
    rep.terminals = 1;
    rep.shortcut = true;
    return rep;
  }
  if (inst.s_edges.empty() || inst.budget >= static_cast<int>(inst.s_edges.size())) {
    // Deleting one endpoint of every S-edge is a solution.
    rep.output = canonical_true_instance(inst.budget);
    rep.terminals = 0;
    rep.shortcut = true;
    return rep;
  }

  const int k = inst.budget;
  SinkCopies g1 = with_sink_copies(inst.graph, inst.s_edges);
  GammoidSpec spec;
  spec.graph = g1.graph;
  spec.sources = terminals;
  spec.ground.assign(g1.graph.vertices.begin(), g1.graph.vertices.end());
  MatroidRep m1 = represent(spec, seed);

  std::vector<Vertex> hats;
  std::vector<Triple> family;
  Vertex next = *g1.graph.vertices.rbegin() + 1;
  for (Vertex v : inst.graph.vertices()) {
    hats.push_back(next);
    family.push_back(Triple{v, g1.first.at(v), g1.second.at(v), next});
    ++next;
  }
  MatroidRep m2 = uniform_rep(hats, k);
  MatroidRep sum = direct_sum(m1, m2);

  RepresentativeResult kept =
      representative_subset(sum, m1.matrix.rows(), m2.matrix.rows(), family);
  rep.family_before = family.size();
  rep.family_after = kept.kept.size();

  rep.kept = terminals;
  for (const Triple& t : kept.kept) rep.kept.insert(t.origin);
  rep.output.graph = torso(inst.graph, rep.kept, inst.s_edges);
  rep.output.s_edges = inst.s_edges;
  rep.output.budget = k;
  return rep;
}

}  // namespace sfvs
