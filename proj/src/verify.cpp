#include "sfvs/verify.hpp"

#include <random>
#include <sstream>

#include "sfvs/generators.hpp"
#include "sfvs/io.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/pipeline.hpp"

namespace sfvs {

std::string VerifySummary::text() const {
  std::ostringstream os;
  os << "trials=" << trials << '\n'
     << "yes=" << yes << '\n'
     << "no=" << no << '\n'
     << "mismatches=" << mismatches << '\n'
     << "bound_checks=" << bound_checks << '\n'
     << "kernel_bound_checks=" << kernel_bound_checks << '\n'
     << "rule_fixpoints=" << rule_fixpoints << '\n'
     << "bound_violations=" << bound_violations << '\n';
  for (int r = 1; r <= 10; ++r) os << "rule_" << r << "_fired=" << fired[r] << '\n';
  for (const auto& [name, count] : models) os << "model_" << name << '=' << count << '\n';
  for (const auto& f : failures) os << "failure=" << f << '\n';
  os << "status=" << (ok() ? "ok" : "failed") << '\n';
  return os.str();
}

VerifySummary run_verify(const VerifyParams& params) {
  VerifySummary sum;
  // The kernel may exceed the default solver caps; the search is FPT in k.
  const SolverLimits limits{1000, std::max(params.k_max, 0) + 1};
  for (int t = 0; t < params.trials; ++t) {
    std::mt19937_64 rng(params.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(t));
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    GenParams gp;
    PipelineOptions opt;
    opt.stage = Stage::Full;
    opt.seed = rng();
    opt.limits = {25, 6};
    gp.seed = rng();
    if (t % 2 == 0) {
      gp.model = GenModel::Gnm;
      gp.n = uniform(std::min(2, params.n_max), params.n_max);
      gp.m = uniform(gp.n == 0 ? 0 : gp.n - 1, 2 * gp.n);
      gp.s = gp.m == 0 ? 0 : uniform(1, std::min(gp.m, 4));
      gp.k = uniform(0, params.k_max);
      opt.provider = (t / 2) % 2 ? Provider::Greedy : Provider::Exact;
    } else {
      gp.model = GenModel::BubbleForest;
      gp.n = uniform(std::max(0, params.n_max - 4), params.n_max);
      gp.m = 0;
      gp.s = uniform(0, 2);
      gp.k = uniform(std::min(1, params.k_max), params.k_max);
      opt.provider = Provider::Planted;
    }
    Generated gen = generate(gp);
    opt.planted = gen.planted_z;
    ++sum.models[gen.motif];
    ++sum.trials;

    std::string tag = "trial " + std::to_string(t) + " motif " + gen.motif + " n=" + std::to_string(gp.n) +
                      " k=" + std::to_string(gp.k);
    try {
      PipelineResult res = kernelize(gen.instance, opt);
      for (int r = 1; r <= 10; ++r) sum.fired[r] += res.fired[r];
      for (const auto& b : res.bounds) {
        ++sum.bound_checks;
        if (b.name == "kernel_vertices") ++sum.kernel_bound_checks;
        if (b.name == "pairs") ++sum.rule_fixpoints;
        if (!b.holds()) {
          ++sum.bound_violations;
          sum.failures.push_back(tag + " bound " + b.name);
        }
      }
      bool before = decide(gen.instance, limits);
      bool after = decide(res.output, limits);
      (before ? sum.yes : sum.no)++;
      if (before != after) {
        ++sum.mismatches;
        sum.failures.push_back(tag + " answer " + (before ? "yes" : "no") + "->" + (after ? "yes" : "no"));
      }
    } catch (const std::exception& e) {
      sum.failures.push_back(tag + " error " + e.what());
    }
  }
  return sum;
}

}  // namespace sfvs
