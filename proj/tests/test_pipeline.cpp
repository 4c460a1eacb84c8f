#include <random>

#include "doctest.h"
#include "sfvs/generators.hpp"
#include "sfvs/io.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/pipeline.hpp"
#include "sfvs/s_kernel.hpp"
#include "sfvs/verify.hpp"

using namespace sfvs;

namespace {
const SolverLimits kWide{1000, 6};
}

TEST_CASE("negative budget gives the canonical NO instance") {
  auto inst = parse_instance_string("p sfvs 3 3 -1\ne 1 2 s\ne 2 3 -\ne 3 1 -\n");
  for (Stage st : {Stage::Rules, Stage::Matroid, Stage::Full}) {
    PipelineOptions opt;
    opt.stage = st;
    auto res = kernelize(inst, opt);
    CHECK(res.output == canonical_false_instance());
  }
}

TEST_CASE("stages agree with the oracle and report their bounds") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 90; ++trial) {
    GenParams p{6 + trial % 8, 8 + trial % 9, 1 + trial % 3, trial % 3, rng(), GenModel::Gnm};
    auto g = generate(p);
    bool expected = decide(g.instance, kWide);
    for (Stage st : {Stage::Rules, Stage::Matroid, Stage::Full}) {
      PipelineOptions opt;
      opt.stage = st;
      opt.seed = rng();
      opt.provider = trial % 2 ? Provider::Greedy : Provider::Exact;
      auto res = kernelize(g.instance, opt);
      CHECK(decide(res.output, kWide) == expected);
      CHECK(res.bounds_hold());
      const std::string text = res.report.text();
      CHECK(text.find(std::string("stage=") + stage_name(st) + "\n") == 0);
      CHECK(text.find("bounds=ok") != std::string::npos);
    }
  }
}

TEST_CASE("k = 2 full stage respects the kernel size bound") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto g = generate({12, 18, 3, 2, seed, GenModel::Gnm});
    PipelineOptions opt;
    opt.provider = Provider::Greedy;
    auto res = kernelize(g.instance, opt);
    for (const auto& b : res.bounds) {
      CHECK(b.holds());
      if (b.name == "kernel_vertices") ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("kernelize is deterministic") {
  auto g = generate({14, 0, 1, 2, 5, GenModel::BubbleForest});
  PipelineOptions opt;
  opt.seed = 77;
  opt.provider = Provider::Planted;
  opt.planted = g.planted_z;
  auto a = kernelize(g.instance, opt);
  auto b = kernelize(g.instance, opt);
  CHECK(a.report.text() == b.report.text());
  CHECK(instance_to_string({a.output, {}}, a.origin) == instance_to_string({b.output, {}}, b.origin));
}

TEST_CASE("output map points back to input vertices") {
  auto g = generate({10, 16, 3, 1, 4, GenModel::Gnm});
  PipelineOptions opt;
  opt.stage = Stage::Rules;
  auto res = kernelize(g.instance, opt);
  for (const auto& [v, orig] : res.origin) {
    CHECK(res.output.graph.has_vertex(v));
    CHECK(g.instance.base.graph.has_vertex(orig));
  }
}

TEST_CASE("verify sweep") {
  VerifyParams none{0, 16, 3, 1};
  auto empty = run_verify(none);
  CHECK(empty.ok());
  CHECK(empty.trials == 0);
  VerifyParams small{60, 12, 2, 9};
  auto a = run_verify(small);
  CHECK(a.ok());
  CHECK(a.trials == 60);
  CHECK(a.text() == run_verify(small).text());
}
