#include "doctest.h"
#include "sfvs/generators.hpp"
#include "sfvs/io.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/pipeline.hpp"

using namespace sfvs;

TEST_CASE("gnm basics") {
  auto g = generate({5, 0, 0, 1, 3, GenModel::Gnm});
  CHECK(g.instance.base.graph.num_vertices() == 5);
  CHECK(g.instance.base.graph.num_edges() == 0);
  auto h = generate({7, 12, 4, 2, 3, GenModel::Gnm});
  CHECK(h.instance.base.graph.num_edges() == 12);
  CHECK(h.instance.base.s_edges.size() == 4);
  CHECK(h.instance.base.budget == 2);
  CHECK_THROWS_AS(generate({7, 2, 4, 2, 3, GenModel::Gnm}), std::invalid_argument);
  CHECK_THROWS_AS(generate({0, 2, 0, 2, 3, GenModel::Gnm}), std::invalid_argument);
  CHECK_THROWS_AS(generate({-1, 0, 0, 2, 3, GenModel::BubbleForest}), std::invalid_argument);
}

TEST_CASE("fixed seed gives identical files") {
  for (auto model : {GenModel::Gnm, GenModel::BubbleForest}) {
    GenParams p{14, 20, 3, 2, 99, model};
    CHECK(instance_to_string(generate(p).instance) == instance_to_string(generate(p).instance));
  }
}

TEST_CASE("planted Z is a solution avoiding the subdivided S-edges") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    GenParams p{8 + static_cast<int>(seed % 9), 0, static_cast<int>(seed % 3), static_cast<int>(seed % 4), seed,
                GenModel::BubbleForest};
    auto g = generate(p);
    CHECK(static_cast<int>(g.instance.base.graph.num_vertices()) == p.n);
    auto norm = normalize(g.instance.base);
    CHECK(is_solution(norm.instance, {g.planted_z}));
    for (Vertex v : norm.instance.terminals()) CHECK_FALSE(g.planted_z.count(v));
  }
}

namespace {

// Fired counts of the rule stage on the first seed producing the motif.
std::array<int, 11> fired_on(const std::string& motif, int n, int k) {
  for (std::uint64_t seed = 1; seed < 500; ++seed) {
    auto g = generate({n, 0, 0, k, seed, GenModel::BubbleForest});
    if (g.motif != motif) continue;
    PipelineOptions opt;
    opt.stage = Stage::Rules;
    opt.provider = Provider::Planted;
    opt.planted = g.planted_z;
    auto res = kernelize(g.instance, opt);
    CHECK(res.report.text().find("z_planted_rejected") == std::string::npos);
    CHECK(decide(res.output, {1000, 6}) == decide(g.instance));
    return res.fired;
  }
  FAIL("motif " << motif << " never generated");
  return {};
}

}  // namespace

TEST_CASE("each motif triggers its rules") {
  auto flower = fired_on("flower", 8, 1);
  CHECK(flower[6] >= 1);
  CHECK(flower[1] >= 1);
  auto flower2 = fired_on("flower", 13, 2);
  CHECK(flower2[6] >= 1);
  auto pair = fired_on("pair", 8, 1);
  CHECK(pair[7] >= 1);
  CHECK(pair[8] >= 3);
  auto hub = fired_on("pair-hub", 6, 1);
  CHECK(hub[4] >= 1);
  CHECK(hub[1] >= 1);
  auto twice = fired_on("double-pair", 16, 1);
  CHECK(twice[7] == 2);
  CHECK(twice[5] == 1);
  auto stars = fired_on("stars", 16, 2);
  CHECK(stars[9] >= 1);
  CHECK(stars[10] >= 4);
  auto noisy = fired_on("pair", 12, 1);
  CHECK(noisy[2] >= 1);
}
