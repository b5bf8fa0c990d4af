#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include <set>

#include "ptutte/error.hpp"
#include "ptutte/gen.hpp"
#include "ptutte/matroid.hpp"

using namespace ptutte;

TEST_CASE("uniform matroids") {
  CHECK(uniform_matroid(1, 2).rank() == table(2, {0, 1, 1, 1}));
  CHECK(uniform_matroid(0, 0).rank() == RankTable());
  CHECK(uniform_matroid(3, 3).rank() == table(3, {0, 1, 1, 2, 1, 2, 2, 3}));
  CHECK_THROWS_AS(uniform_matroid(3, 2), Error);
  CHECK(uniform_catalog(4).size() == 15);
}

TEST_CASE("graphic matroids against BFS ranks") {
  CHECK(graphic_matroid({3, {{1, 2}, {2, 3}, {1, 3}}}).rank() == table(3, {0, 1, 1, 2, 1, 2, 2, 2}));
  CHECK(graphic_matroid({3, {{1, 2}, {2, 3}}}).rank() == table(2, {0, 1, 1, 2}));
  CHECK(graphic_matroid({1, {{1, 1}}}).rank() == table(1, {0, 0}));
  CHECK_THROWS_AS(graphic_matroid({2, {{1, 3}}}), Error);
  oracle::SplitMix rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    GraphSpec g;
    g.vertices = static_cast<std::size_t>(rng.range(1, 5));
    const auto m = static_cast<std::size_t>(rng.range(0, 6));
    for (std::size_t e = 0; e < m; ++e)
      g.edges.emplace_back(rng.range(1, static_cast<long long>(g.vertices)),
                           rng.range(1, static_cast<long long>(g.vertices)));
    const RankTable t = graphic_matroid(g).rank();
    for (Mask s = 0; s <= t.full(); ++s) CHECK(t(s) == oracle::graphic_rank(g.vertices, g.edges, s));
  }
}

TEST_CASE("graphic catalog") {
  const auto cat = graphic_catalog(3);
  std::set<std::vector<Rank>> seen;
  for (const auto& m : cat) {
    CHECK(oracle::is_matroid(m.rank()));
    CHECK(seen.insert(std::vector<Rank>(m.rank().values().begin(), m.rank().values().end())).second);
  }
  bool has_triangle = false;
  for (const auto& m : cat) has_triangle |= m.rank() == table(3, {0, 1, 1, 2, 1, 2, 2, 2});
  CHECK(has_triangle);
}

TEST_CASE("concave plus modular") {
  const std::vector<Rank> g{0, 2, 3}, w{0, 0};
  CHECK(concave_plus_modular(g, w) == table(2, {0, 2, 2, 3}));
  const std::vector<Rank> g2{0, 1, 1}, w2{1, -1};
  CHECK(concave_plus_modular(g2, w2) == table(2, {0, 2, 0, 1}));
  const std::vector<Rank> convex{0, 1, 3};
  CHECK_THROWS_AS(concave_plus_modular(convex, w), Error);
  const std::vector<Rank> nonzero{1, 1, 1};
  CHECK_THROWS_AS(concave_plus_modular(nonzero, w), Error);
}

TEST_CASE("random generators are valid, bounded and deterministic") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = seed % 6;
    const RankTable a = random_submodular(n, seed, 5);
    CHECK(a == random_submodular(n, seed, 5));
    CHECK(oracle::is_polymatroid(a));
    const RankTable b = random_mixture(n, seed, 5);
    CHECK(b == random_mixture(n, seed, 5));
    CHECK(oracle::is_polymatroid(b));
    for (Rank v : a.values()) CHECK(std::abs(v) <= 5);
    for (Rank v : b.values()) CHECK(std::abs(v) <= 5);
  }
  CHECK_FALSE(random_submodular(4, 1, 5) == random_submodular(4, 2, 5));
}

TEST_CASE("direct sums") {
  const RankTable s = direct_sum(table(1, {0, 2}), table(1, {0, 3}));
  CHECK(s == table(2, {0, 2, 3, 5}));
  CHECK(oracle::is_polymatroid(direct_sum(table(2, {0, 2, 2, 3}), uniform_matroid(1, 2).rank())));
}

TEST_CASE("exhaustive enumeration of small tables") {
  const auto all = all_submodular(2, 1);
  std::size_t expected = 0;
  for (Rank a = -1; a <= 1; ++a)
    for (Rank b = -1; b <= 1; ++b)
      for (Rank c = -1; c <= 1; ++c) expected += oracle::is_polymatroid(table(2, {0, a, b, c}));
  CHECK(all.size() == expected);
  for (const auto& t : all) CHECK(oracle::is_polymatroid(t));
}

TEST_CASE("boundary tables are polymatroids") {
  const auto tables = boundary_tables();
  CHECK_FALSE(tables.empty());
  for (const auto& t : tables) CHECK(oracle::is_polymatroid(t));
}

TEST_CASE("corpus") {
  CorpusOptions opt;
  const auto corpus = build_corpus(opt);
  std::size_t random = 0;
  for (const auto& e : corpus) {
    CHECK(oracle::is_polymatroid(e.table));
    if (e.matroid) CHECK(oracle::is_matroid(e.table));
    random += e.name.rfind("random", 0) == 0;
  }
  CHECK(random == 200);
  CHECK(build_corpus(opt).size() == corpus.size());
}
