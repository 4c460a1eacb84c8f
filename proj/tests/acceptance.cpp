// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed below and never relaxed at run time.

#include <cstdio>
#include <random>
#include <string>

#include "oracles.hpp"
#include "sfvs/flowers.hpp"
#include "sfvs/gammoid.hpp"
#include "sfvs/generators.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/path_packing.hpp"
#include "sfvs/pipeline.hpp"
#include "sfvs/rep_sets.hpp"
#include "sfvs/s_kernel.hpp"
#include "sfvs/verify.hpp"

using namespace sfvs;

namespace {

constexpr int kEquivalenceTrials = 600;
constexpr int kRepSetTrials = 120;
constexpr int kGammoidTrials = 120;
constexpr int kFlowerTrials = 240;
constexpr int kGallaiTrials = 240;
constexpr int kTorsoTrials = 240;
constexpr int kCoverageTrials = 600;
constexpr int kTolerance = 0;  // allowed violations for every criterion

const SolverLimits kWide{1000, 6};
int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s criterion-%d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::string str(long long v) { return std::to_string(v); }

std::vector<std::vector<Vertex>> subsets_up_to(const std::vector<Vertex>& ground, std::size_t max) {
  std::vector<std::vector<Vertex>> out{{}};
  for (Vertex v : ground) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i)
      if (out[i].size() < max) {
        auto s = out[i];
        s.push_back(v);
        out.push_back(s);
      }
  }
  return out;
}

long long choose2(long long t) { return t * (t - 1) / 2; }

// Criteria 1-3 share one sweep of the full pipeline.
void pipeline_criteria() {
  int mismatches = 0, gnm = 0, forest = 0, errors = 0;
  int kernel_runs = 0, kernel_violations = 0;
  int rule_runs = 0, rule_violations = 0;
  std::string first_problem;

  auto kernel_check = [&](const Instance& in, const Instance& out) {
    if (in.s_edges.empty() || in.budget < 0 || in.budget >= static_cast<int>(in.s_edges.size())) return;
    const long long t = static_cast<long long>(in.terminals().size());
    ++kernel_runs;
    if (static_cast<long long>(out.graph.num_vertices()) > choose2(t) * in.budget + t) ++kernel_violations;
  };

  for (int trial = 0; trial < kEquivalenceTrials; ++trial) {
    std::mt19937_64 rng(1000 + trial);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    GenParams gp;
    PipelineOptions opt;
    gp.seed = rng();
    opt.seed = rng();
    if (trial % 2 == 0) {
      gp.model = GenModel::Gnm;
      gp.n = uniform(2, 16);
      gp.m = uniform(gp.n - 1, 2 * gp.n);
      gp.s = uniform(1, std::min(gp.m, 4));
      gp.k = uniform(0, 3);
      opt.provider = (trial / 2) % 2 ? Provider::Greedy : Provider::Exact;
      ++gnm;
    } else {
      gp.model = GenModel::BubbleForest;
      gp.n = uniform(6, 16);
      gp.s = uniform(0, 2);
      gp.k = uniform(1, 3);
      opt.provider = Provider::Planted;
      ++forest;
    }
    Generated g = generate(gp);
    opt.planted = g.planted_z;
    try {
      opt.stage = Stage::Full;
      PipelineResult full = kernelize(g.instance, opt);
      if (decide(g.instance, kWide) != decide(full.output, kWide)) {
        ++mismatches;
        if (first_problem.empty()) first_problem = "mismatch at trial " + str(trial);
      }

      opt.stage = Stage::Rules;
      PipelineResult rules = kernelize(g.instance, opt);
      kernel_check(rules.output, full.output);
      bool reduced = false;
      long long m = 0, l = 0, p = 0, b = 0, z = 0;
      for (const auto& bc : rules.bounds) {
        reduced = true;
        if (!bc.holds()) ++rule_violations;
      }
      for (const auto& [key, value] : rules.report.entries) {
        if (key == "fixpoint_matching") m = std::stoll(value);
        if (key == "fixpoint_unmatched_leaves") l = std::stoll(value);
        if (key == "fixpoint_pairs") p = std::stoll(value);
        if (key == "fixpoint_blockers") b = std::stoll(value);
        if (key == "fixpoint_z") z = std::stoll(value);
      }
      if (reduced) {
        ++rule_runs;
        const long long k = std::max(0, rules.output.budget);
        const long long s_out = static_cast<long long>(rules.output.s_edges.size());
        if (p > k * k || m > (k + 1) * z * z + k * z || l > (k + 1) * z * (b + z) + k * z ||
            s_out > 2 * m + l + k * k)
          ++rule_violations;
      }
    } catch (const std::exception& e) {
      ++errors;
      if (first_problem.empty()) first_problem = "trial " + str(trial) + ": " + e.what();
    }
  }

  // Direct S-kernel runs on normalized random instances.
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 6 + trial % 8;
    auto ri = oracle::random_instance(rng, n, n + 2 + trial % 8, 1 + trial % 4, false, true);
    Instance inst = normalize(Instance{ri.graph, ri.s_edges, trial % 3}).instance;
    kernel_check(inst, kernelize_by_s(inst, rng()).output);
  }

  const bool eq_ok = mismatches <= kTolerance && errors == 0 && gnm + forest >= 500 && gnm > 0 && forest > 0;
  report(1, "end-to-end-equivalence", eq_ok,
         str(gnm + forest) + " trials (gnm " + str(gnm) + ", bubble-forest " + str(forest) + "), n<=16, k<=3, " +
             str(mismatches) + " mismatches, " + str(errors) + " errors, tolerance " + str(kTolerance) +
             (first_problem.empty() ? "" : "; " + first_problem));
  report(2, "matroid-stage-size-bound", kernel_violations <= kTolerance && kernel_runs > 0,
         str(kernel_runs) + " s-kernel runs checked against C(|T|,2)*k+|T|, " + str(kernel_violations) +
             " violations, tolerance " + str(kTolerance));
  report(3, "rule-stage-size-bounds", rule_violations <= kTolerance && rule_runs > 0,
         str(rule_runs) + " rule fixpoints checked (|P|<=k^2, |M|, |L|, |B|<=2k|Z|, |S'|<=2|M|+|L|+k^2), " +
             str(rule_violations) + " violations, tolerance " + str(kTolerance));
}

// Upper block: a gammoid of a random digraph with |T| sources restricted to
// a few non-source vertices; lower block: uniform of rank k.
void representative_criterion() {
  std::mt19937_64 rng(404);
  int violations = 0;
  long long sets_checked = 0;
  for (int trial = 0; trial < kRepSetTrials; ++trial) {
    const int t = 3 + trial % 3, k = 1 + trial % 2;
    const int n = t + 4;
    GammoidSpec spec;
    spec.graph = oracle::random_digraph(rng, n, 0.3);
    for (int v = 0; v < t; ++v) spec.sources.insert(v);
    const int upper_ground = 10 - (k + 1);
    for (int v = 0; v < n && static_cast<int>(spec.ground.size()) < upper_ground; ++v) spec.ground.push_back(v);
    MatroidRep upper = represent(spec, rng());
    std::vector<Vertex> hats;
    for (int i = 0; i <= k; ++i) hats.push_back(100 + i);
    MatroidRep rep = direct_sum(upper, uniform_rep(hats, k));

    std::vector<Triple> family;
    std::uniform_int_distribution<std::size_t> pick_up(0, spec.ground.size() - 1), pick_hat(0, hats.size() - 1);
    for (int i = 0; i < 18; ++i) {
      Vertex a = spec.ground[pick_up(rng)], b = spec.ground[pick_up(rng)];
      if (a == b) continue;
      family.push_back(Triple{i, a, b, hats[pick_hat(rng)]});
    }
    auto kept = representative_subset(rep, t, k, family).kept;
    long long r = oracle::check_representative(rep, family, kept, t + k - 3);
    if (r < 0 || kept.size() > static_cast<std::size_t>(choose2(t) * k))
      ++violations;
    else
      sets_checked += r;
  }
  report(4, "representative-set-correctness", violations <= kTolerance,
         str(kRepSetTrials) + " block matroids (|T|<=5, k<=2, ground<=10), " + str(sets_checked) +
             " independent sets B examined, " + str(violations) + " violations, tolerance " + str(kTolerance));
}

void gammoid_criterion() {
  std::mt19937_64 rng(505);
  int violations = 0;
  long long subsets = 0;
  for (int trial = 0; trial < kGammoidTrials; ++trial) {
    const int n = 3 + trial % 6;
    GammoidSpec spec;
    spec.graph = oracle::random_digraph(rng, n, 0.3);
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) spec.sources.insert(v);
    spec.ground.assign(spec.graph.vertices.begin(), spec.graph.vertices.end());
    MatroidRep rep = represent(spec, rng());
    for (const auto& sub : subsets_up_to(spec.ground, 4)) {
      std::set<Vertex> x(sub.begin(), sub.end());
      ++subsets;
      const int r = rep.rank_of(sub);
      // Menger: the rank of X is the smallest separator between sources and X.
      if (r != linked_rank(spec, x) || r != oracle::min_vertex_separator(spec.graph, spec.sources, x) ||
          (r == static_cast<int>(x.size())) != oracle::linked_exhaustive(spec.graph, spec.sources, x))
        ++violations;
    }
  }
  report(5, "gammoid-representation-soundness", violations <= kTolerance,
         str(kGammoidTrials) + " digraphs (<=8 vertices), " + str(subsets) + " ground subsets of size <=4, " +
             str(violations) + " disagreements, tolerance " + str(kTolerance));
}

void flower_criterion() {
  std::mt19937_64 rng(606);
  int mismatches = 0;
  for (int trial = 0; trial < kFlowerTrials; ++trial) {
    const int n = 4 + trial % 6;
    auto ri = oracle::random_instance(rng, n, n + 2 + trial % 7, 1 + trial % 4, trial % 4 == 0, true);
    Vertex z = static_cast<Vertex>(rng() % n);
    Flower f = max_flower(ri.graph, ri.s_edges, z, ParityBackend::Algebraic, rng());
    if (static_cast<int>(f.order()) != brute_force_flower(ri.graph, ri.s_edges, z)) ++mismatches;
  }
  report(6, "flower-oracle-equivalence", mismatches <= kTolerance,
         str(kFlowerTrials) + " instances (<=9 vertices, |S|<=4), " + str(mismatches) + " mismatches, tolerance " +
             str(kTolerance));
}

// Independent certificate check: disjoint paths along existing edges, ends
// distinct in A, interiors outside A.
bool valid_apaths(const Multigraph& g, const std::set<Vertex>& a, const std::vector<std::vector<Vertex>>& paths) {
  std::set<Vertex> used;
  for (const auto& p : paths) {
    if (p.size() < 2 || !a.count(p.front()) || !a.count(p.back())) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!used.insert(p[i]).second) return false;
      if (i > 0 && i + 1 < p.size() && a.count(p[i])) return false;
      if (i > 0 && g.edges_between(p[i - 1], p[i]).empty()) return false;
    }
  }
  return true;
}

void gallai_criterion() {
  std::mt19937_64 rng(707);
  int violations = 0, packings = 0, blockers = 0;
  for (int trial = 0; trial < kGallaiTrials; ++trial) {
    const int n = 4 + trial % 6;
    auto ri = oracle::random_instance(rng, n, n + 1 + trial % 6, 0, false, true);
    std::set<Vertex> a;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) a.insert(v);
    const int k = trial % 3;
    const int best = oracle::max_apaths_exhaustive(ri.graph, a);
    if (apath_number(ri.graph, a) != best) ++violations;
    GallaiOutcome out = gallai_blocker_or_packing(ri.graph, a, k);
    if (out.has_packing) {
      ++packings;
      if (static_cast<int>(out.packing.size()) != k + 1 || !valid_apaths(ri.graph, a, out.packing.paths))
        ++violations;
    } else {
      ++blockers;
      Multigraph rest = ri.graph;
      std::set<Vertex> a_rest;
      for (Vertex v : out.blocker) rest.remove_vertex(v);
      for (Vertex v : a)
        if (!out.blocker.count(v)) a_rest.insert(v);
      if (best > k || static_cast<int>(out.blocker.size()) > 2 * best ||
          oracle::max_apaths_exhaustive(rest, a_rest) != 0)
        ++violations;
    }
  }
  report(7, "gallai-duality", violations <= kTolerance,
         str(kGallaiTrials) + " queries (<=9 vertices; " + str(packings) + " packings, " + str(blockers) +
             " blockers), exhaustive cross-check, " + str(violations) + " violations, tolerance " +
             str(kTolerance));
}

void torso_criterion() {
  std::mt19937_64 rng(808);
  int violations = 0;
  long long deletions = 0;
  for (int trial = 0; trial < kTorsoTrials; ++trial) {
    const int n = 5 + trial % 6;
    auto ri = oracle::random_instance(rng, n, n + 2 + trial % 7, 1 + trial % 3, trial % 5 == 0, true);
    std::set<Vertex> w = Instance{ri.graph, ri.s_edges, 0}.terminals();
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) w.insert(v);
    Multigraph t = torso(ri.graph, w, ri.s_edges);
    for (const auto& sub : subsets_up_to(std::vector<Vertex>(w.begin(), w.end()), 3)) {
      std::set<Vertex> x(sub.begin(), sub.end());
      ++deletions;
      if (oracle::s_cycle_by_search(ri.graph, ri.s_edges, x) != oracle::s_cycle_by_search(t, ri.s_edges, x))
        ++violations;
    }
  }
  report(8, "torso-equivalence", violations <= kTolerance,
         str(kTorsoTrials) + " graphs (<=10 vertices, w contains V(S)), " + str(deletions) +
             " deletion sets X of size <=3, " + str(violations) + " disagreements, tolerance " + str(kTolerance));
}

void coverage_criterion() {
  VerifySummary sum = run_verify({kCoverageTrials, 16, 3, 1});
  std::string counts;
  bool all = true;
  for (int r = 1; r <= 10; ++r) {
    counts += (r > 1 ? " " : "") + std::string("r") + str(r) + "=" + str(sum.fired[r]);
    if (sum.fired[r] < 1) all = false;
  }
  report(9, "rule-coverage", all && sum.ok(),
         "verify sweep of " + str(sum.trials) + " trials (n<=16, k<=3): " + counts + "; sweep status " +
             (sum.ok() ? "ok" : "failed"));
}

}  // namespace

int main() {
  pipeline_criteria();
  representative_criterion();
  gammoid_criterion();
  flower_criterion();
  gallai_criterion();
  torso_criterion();
  coverage_criterion();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
