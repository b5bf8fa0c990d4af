#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "ptutte/error.hpp"
#include "ptutte/gen.hpp"

using namespace ptutte;

TEST_CASE("construction limits") {
  CHECK(RankTable().size() == 0);
  CHECK(RankTable().total() == 0);
  CHECK_THROWS_AS(RankTable(2, {0, 1, 1}), Error);
  try {
    RankTable(17, {});
    FAIL("expected a limit error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LimitExceeded);
  }
}

TEST_CASE("mask helpers") {
  CHECK(element_bit(1) == 1U);
  CHECK(element_bit(3) == 4U);
  CHECK(full_mask(0) == 0U);
  CHECK(full_mask(4) == 15U);
  CHECK(mask_to_string(0) == "{}");
  CHECK(mask_to_string(0b101) == "{1,3}");
  CHECK(lift_mask(0b11, 2) == 0b101U);
  CHECK(lift_mask(0b11, 1) == 0b110U);
  CHECK(shift_after_removal(3, 2) == 2);
  CHECK(shift_after_removal(1, 2) == 1);
}

TEST_CASE("polymatroid validation examples") {
  CHECK(validate_polymatroid(RankTable()).ok());
  CHECK(validate_polymatroid(table(2, {0, 1, 1, 1})).ok());
  const Validation v = validate_polymatroid(table(2, {0, 0, 0, 1}));
  CHECK(v.axiom == Axiom::Submodularity);
  CHECK(v.first == 0b01U);
  CHECK(v.second == 0b10U);
  const Validation e = validate_polymatroid(table(1, {1, 2}));
  CHECK(e.axiom == Axiom::EmptySetZero);
  CHECK(std::string(axiom_name(Axiom::Submodularity)) == "(ii) submodularity");
  CHECK(std::string(axiom_name(Axiom::EmptySetZero)) == "(i) f(empty) = 0");
  CHECK_THROWS_AS(require_polymatroid(table(2, {0, 0, 0, 1})), Error);
}

TEST_CASE("local submodularity check agrees with the pairwise oracle") {
  oracle::SplitMix rng(7);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.range(0, 4));
    std::vector<Rank> v(std::size_t{1} << n);
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = rng.range(-1, 3);
    const RankTable t(n, v);
    const bool expected = oracle::is_polymatroid(t);
    CHECK(validate_polymatroid(t).ok() == expected);
    (expected ? valid : invalid)++;
  }
  CHECK(valid > 50);
  CHECK(invalid > 50);
}

TEST_CASE("violation witnesses are real violations") {
  oracle::SplitMix rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Rank> v(8);
    for (std::size_t i = 1; i < 8; ++i) v[i] = rng.range(0, 3);
    const RankTable t(3, v);
    const Validation r = validate_polymatroid(t);
    if (r.axiom == Axiom::Submodularity)
      CHECK(t(r.first) + t(r.second) < t(r.first | r.second) + t(r.first & r.second));
  }
}

TEST_CASE("pivot data") {
  const PivotData a = pivot_data(table(2, {0, 1, 1, 1}), 1);
  CHECK(a.alpha == 0);
  CHECK(a.beta == 1);
  CHECK(a.range_size() == 2);
  const PivotData b = pivot_data(table(1, {0, 3}), 1);
  CHECK(b.alpha == 3);
  CHECK(b.beta == 3);
  CHECK(b.range_size() == 1);
  const PivotData c = pivot_data(table(2, {0, 2, 2, 3}), 2);
  CHECK(c.alpha == 1);
  CHECK(c.beta == 2);
  CHECK(c.contains(2));
  CHECK_FALSE(c.contains(3));
  CHECK_THROWS_AS(pivot_data(table(2, {0, 2, 2, 3}), 0), Error);
  CHECK_THROWS_AS(pivot_data(table(2, {0, 2, 2, 3}), 3), Error);
}

TEST_CASE("deletion and contraction") {
  CHECK(delete_element(table(2, {0, 1, 1, 1}), 1) == table(1, {0, 1}));
  CHECK(delete_element(table(1, {0, 4}), 1) == RankTable());
  CHECK(delete_element(table(2, {0, 2, 2, 3}), 2) == table(1, {0, 2}));
  CHECK(contract_element(table(2, {0, 1, 1, 1}), 1) == table(1, {0, 0}));
  CHECK(contract_element(table(1, {0, 4}), 1) == RankTable());
  CHECK(contract_element(table(2, {0, 2, 2, 3}), 2) == table(1, {0, 1}));
  CHECK_THROWS_AS(delete_element(RankTable(), 1), Error);
}

TEST_CASE("slices") {
  CHECK(slice(table(2, {0, 1, 1, 1}), 1, 0) == table(1, {0, 1}));
  CHECK(slice(table(2, {0, 1, 1, 1}), 1, 1) == table(1, {0, 0}));
  const RankTable p = table(2, {0, 2, 2, 3});
  CHECK(slice(p, 2, 1) == table(1, {0, 2}));
  CHECK(slice(p, 2, 1) == delete_element(p, 2));
  try {
    (void)slice(p, 2, 5);
    FAIL("expected out of range");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("slice agrees with projecting the bases") {
  oracle::SplitMix rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const RankTable t = oracle::random_polymatroid(static_cast<std::size_t>(rng.range(1, 4)), rng);
    const auto all = oracle::bases(t);
    for (Element s = 1; s <= t.size(); ++s) {
      const PivotData pd = pivot_data(t, s);
      for (Rank j = pd.alpha; j <= pd.beta; ++j) {
        std::vector<std::vector<Rank>> projected;
        for (const auto& a : all)
          if (a[s - 1] == j) {
            auto b = a;
            b.erase(b.begin() + static_cast<std::ptrdiff_t>(s - 1));
            projected.push_back(b);
          }
        CHECK(oracle::bases(slice(t, s, j)) == projected);
      }
    }
  }
}

TEST_CASE("minors stay valid") {
  oracle::SplitMix rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const RankTable t = oracle::random_polymatroid(static_cast<std::size_t>(rng.range(1, 5)), rng);
    REQUIRE(oracle::is_polymatroid(t));
    for (Element s = 1; s <= t.size(); ++s) {
      CHECK(oracle::is_polymatroid(delete_element(t, s)));
      CHECK(oracle::is_polymatroid(contract_element(t, s)));
      const PivotData pd = pivot_data(t, s);
      CHECK(pd.alpha <= pd.beta);
      for (Rank j = pd.alpha; j <= pd.beta; ++j) CHECK(oracle::is_polymatroid(slice(t, s, j)));
    }
  }
}

TEST_CASE("permutation") {
  const RankTable p = table(2, {0, 2, 1, 3});
  const std::vector<Element> id{1, 2}, swap{2, 1};
  CHECK(permute(p, id) == p);
  CHECK(permute(p, swap) == table(2, {0, 1, 2, 3}));
  oracle::SplitMix rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
    const RankTable t = oracle::random_polymatroid(n, rng);
    std::vector<Element> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = i + 1;
    rng.shuffle(sigma);
    std::vector<Element> inverse(n);
    for (std::size_t i = 0; i < n; ++i) inverse[sigma[i] - 1] = i + 1;
    CHECK(permute(permute(t, sigma), inverse) == t);
    const RankTable q = permute(t, sigma);
    for (Mask m = 0; m <= t.full(); ++m) {
      Mask image = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1U) image |= element_bit(sigma[i]);
      CHECK(q(image) == t(m));
    }
  }
  const std::vector<Element> bad{1, 1};
  CHECK_THROWS_AS(permute(p, bad), Error);
  const std::vector<Element> shortv{1};
  CHECK_THROWS_AS(permute(p, shortv), Error);
}
