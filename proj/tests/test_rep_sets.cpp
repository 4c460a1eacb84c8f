#include "doctest.h"
#include "oracles.hpp"
#include "sfvs/rep_sets.hpp"

#include <algorithm>
#include <stdexcept>

using namespace sfvs;

namespace {

// Random upper block of d1 rows on labels 0..g1-1 and a uniform lower block
// of rank d2 on labels 100.., with triples drawn from both.
struct Setup {
  MatroidRep rep;
  std::vector<Triple> family;
};

Setup random_setup(std::mt19937_64& rng, int d1, int d2, int g1, int g2, int triples) {
  Setup s;
  MatroidRep upper;
  upper.matrix = FieldMatrix(d1, g1);
  std::uniform_int_distribution<int> small(0, 2);
  for (int r = 0; r < d1; ++r)
    for (int c = 0; c < g1; ++c) upper.matrix.at(r, c) = Fp(static_cast<std::uint64_t>(small(rng)));
  for (int c = 0; c < g1; ++c) upper.labels.push_back(c);
  upper.rank = rank(upper.matrix);
  std::vector<Vertex> lower_labels;
  for (int c = 0; c < g2; ++c) lower_labels.push_back(100 + c);
  s.rep = direct_sum(upper, uniform_rep(lower_labels, d2));
  std::uniform_int_distribution<int> pick1(0, g1 - 1), pick2(0, g2 - 1);
  for (int i = 0; i < triples; ++i) {
    int a = pick1(rng), b = pick1(rng);
    while (b == a) b = pick1(rng);
    s.family.push_back(Triple{i, a, b, 100 + pick2(rng)});
  }
  return s;
}

}  // namespace

TEST_CASE("representative set examples") {
  std::vector<Vertex> up{0, 1};
  MatroidRep upper = uniform_rep(up, 2);
  MatroidRep rep = direct_sum(upper, uniform_rep({100}, 1));
  std::vector<Triple> one{{7, 0, 1, 100}};
  CHECK(representative_subset(rep, 2, 1, one).kept == one);

  std::vector<Triple> twice{{1, 0, 1, 100}, {2, 0, 1, 100}};
  auto r = representative_subset(rep, 2, 1, twice);
  CHECK(r.kept.size() == 1);
  CHECK(r.kept[0].origin == 1);

  std::vector<Triple> bad{{1, 0, 100, 1}};
  CHECK_THROWS_AS(representative_subset(rep, 2, 1, bad), std::invalid_argument);

  MatroidRep loops = direct_sum(uniform_rep({0, 1}, 1), uniform_rep({100}, 1));
  auto dep = representative_subset(loops, 1, 1, {{3, 0, 1, 100}});
  CHECK(dep.kept.empty());
  CHECK(dep.dependent == 1);
}

TEST_CASE("kept family is representative and within the size bound") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    int d1 = 3 + trial % 3, d2 = 1 + trial % 2;
    Setup s = random_setup(rng, d1, d2, 7, 3, 20);
    auto r = representative_subset(s.rep, d1, d2, s.family);
    CHECK(r.kept.size() <= static_cast<std::size_t>(d1 * (d1 - 1) / 2 * d2));
    CHECK(oracle::check_representative(s.rep, s.family, r.kept, d1 + d2 - 3) >= 0);
  }
}

TEST_CASE("a triple that alone fits some B is kept") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    Setup s = random_setup(rng, 4, 2, 6, 3, 12);
    auto r = representative_subset(s.rep, 4, 2, s.family);
    // For each family triple, test singleton families against B = all sets.
    for (const Triple& t : s.family) {
      bool kept = std::find(r.kept.begin(), r.kept.end(), t) != r.kept.end();
      if (kept) continue;
      std::vector<Triple> others;
      for (const Triple& o : s.family)
        if (!(o == t)) others.push_back(o);
      // Dropping an unkept triple never changes which sets B are fitted.
      CHECK(oracle::check_representative(s.rep, s.family, others, 3) >= 0);
    }
  }
}
