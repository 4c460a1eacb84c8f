#include "sfvs/pipeline.hpp"

#include <sstream>

#include "sfvs/rule_engine.hpp"
#include "sfvs/s_kernel.hpp"

namespace sfvs {

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& [k, v] : entries) os << k << '=' << v << '\n';
  return os.str();
}

bool PipelineResult::bounds_hold() const {
  for (const auto& b : bounds)
    if (!b.holds()) return false;
  return true;
}

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Rules:
      return "rules";
    case Stage::Matroid:
      return "matroid";
    default:
      return "full";
  }
}

const char* provider_name(Provider p) {
  switch (p) {
    case Provider::Exact:
      return "exact";
    case Provider::Greedy:
      return "greedy";
    default:
      return "planted";
  }
}

namespace {

void add_sizes(Report& r, const std::string& prefix, const Instance& inst) {
  r.add(prefix + "_vertices", static_cast<long long>(inst.graph.num_vertices()));
  r.add(prefix + "_edges", static_cast<long long>(inst.graph.num_edges()));
  r.add(prefix + "_s_edges", static_cast<long long>(inst.s_edges.size()));
  r.add(prefix + "_k", inst.budget);
}

const char* outcome_name(EngineResult::Outcome o) {
  switch (o) {
    case EngineResult::Outcome::TrivialFalse:
      return "trivial-false";
    case EngineResult::Outcome::TrivialTrue:
      return "trivial-true";
    default:
      return "reduced";
  }
}

FeasibleSolution pick_z(const Instance& inst, const PipelineOptions& opt, const std::set<Vertex>& forced,
                        Report& report) {
  if (opt.provider == Provider::Planted) {
    SolutionCandidate z;
    for (Vertex v : opt.planted)
      if (!forced.count(v) && inst.graph.has_vertex(v)) z.deleted.insert(v);
    const auto terminals = inst.terminals();
    bool avoids = true;
    for (Vertex v : z.deleted)
      if (terminals.count(v)) avoids = false;
    if (avoids && is_solution(inst, z)) return {z, std::nullopt};
    report.add("z_planted_rejected", 1);
    return {greedy_z(inst), std::nullopt};
  }
  if (opt.provider == Provider::Greedy) return {greedy_z(inst), std::nullopt};
  return feasible_z(inst, opt.limits);
}

void check(PipelineResult& res, const std::string& name, long long value, long long bound) {
  res.bounds.push_back({name, value, bound});
  res.report.add("bound_" + name, std::to_string(value) + "<=" + std::to_string(bound) +
                                      (value <= bound ? ":ok" : ":violated"));
}

Instance run_rules(const PairInstance& input, const PipelineOptions& opt, PipelineResult& res) {
  Report& r = res.report;
  NormalizedInstance norm = normalize(input.base);
  // Vertices with an S-loop are in every solution, so their pairs are met.
  std::set<VertexPair> pairs;
  for (const auto& p : input.pairs)
    if (!norm.forced.count(p.first) && !norm.forced.count(p.second)) pairs.insert(p);
  r.add("normalize_forced", static_cast<long long>(norm.forced.size()));
  add_sizes(r, "normalized", norm.instance);
  res.origin = norm.origin;

  FeasibleSolution z = pick_z(norm.instance, opt, norm.forced, r);
  r.add("z_size", static_cast<long long>(z.z.deleted.size()));
  r.add("z_factor", z.factor ? std::to_string(*z.factor) : "none");

  EngineResult er = apply_rules({norm.instance, pairs}, z.z, z.factor, {opt.seed});
  r.add("rules_outcome", outcome_name(er.outcome));
  for (int rule = 1; rule <= 10; ++rule) {
    r.add("rule_" + std::to_string(rule) + "_fired", er.fired[rule]);
    res.fired[rule] += er.fired[rule];
  }
  for (const auto& t : er.trace) res.trace.push_back(t.line());

  Instance out = finalize(er.instance);
  if (er.outcome == EngineResult::Outcome::Reduced) {
    const FixpointMetrics& m = er.metrics;
    r.add("fixpoint_z", static_cast<long long>(m.z));
    r.add("fixpoint_blockers", static_cast<long long>(m.b));
    r.add("fixpoint_matching", static_cast<long long>(m.m));
    r.add("fixpoint_unmatched_leaves", static_cast<long long>(m.l));
    r.add("fixpoint_pairs", static_cast<long long>(m.p));
    check(res, "pairs", m.p, m.p_bound());
    check(res, "matching", m.m, m.m_bound());
    check(res, "unmatched_leaves", m.l, m.l_bound());
    check(res, "blockers", m.b, m.b_bound());
    check(res, "s_before_finalize", m.s, 2 * m.m + m.l);
    check(res, "s_after_finalize", out.s_edges.size(), m.final_s_bound());
  } else {
    res.origin.clear();
  }
  add_sizes(r, "rules_output", out);
  return out;
}

Instance run_matroid(const Instance& in, const PipelineOptions& opt, PipelineResult& res) {
  KernelReport kr = kernelize_by_s(in, opt.seed);
  Report& r = res.report;
  r.add("kernel_shortcut", kr.shortcut ? 1 : 0);
  r.add("kernel_terminals", static_cast<long long>(kr.terminals));
  r.add("kernel_family_before", static_cast<long long>(kr.family_before));
  r.add("kernel_family_after", static_cast<long long>(kr.family_after));
  if (!kr.shortcut) {
    check(res, "kernel_vertices", kr.output.graph.num_vertices(), kr.vertex_bound());
    std::map<Vertex, Vertex> origin;
    for (Vertex v : kr.output.graph.vertices()) {
      auto it = res.origin.find(v);
      if (it != res.origin.end()) origin[v] = it->second;
    }
    res.origin = std::move(origin);
  } else {
    res.origin.clear();
  }
  return kr.output;
}

}  // namespace

PipelineResult kernelize(const PairInstance& input, const PipelineOptions& opt) {
  PipelineResult res;
  Report& r = res.report;
  r.add("stage", stage_name(opt.stage));
  r.add("seed", std::to_string(opt.seed));
  r.add("provider", provider_name(opt.provider));
  add_sizes(r, "input", input.base);
  r.add("input_pairs", static_cast<long long>(input.pairs.size()));

  for (Vertex v : input.base.graph.vertices()) res.origin[v] = v;
  Instance current = opt.stage == Stage::Matroid ? finalize(input) : run_rules(input, opt, res);
  if (opt.stage != Stage::Rules) current = run_matroid(current, opt, res);

  add_sizes(r, "output", current);
  r.add("bounds", res.bounds_hold() ? "ok" : "violated");
  for (const auto& line : res.trace) r.add("trace", line);
  res.output = std::move(current);
  return res;
}

}  // namespace sfvs
