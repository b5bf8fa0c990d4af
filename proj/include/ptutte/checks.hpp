#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ptutte/matroid.hpp"
#include "ptutte/ranks.hpp"

namespace ptutte {

/// Result of running one or more identity suites. Only the first
/// kMaxRecordedFailures witnesses are kept; `failed` counts all of them.
struct CheckReport {
  static constexpr std::size_t kMaxRecordedFailures = 16;

  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> witnesses;

  bool passed() const noexcept { return failed == 0; }
  void record(bool ok, const std::string& witness);
  void merge(const CheckReport& other);
};

/// Slice endpoints equal deletion / contraction, all four minor commutations
/// for every pair s != t, and every minor of a valid table is valid.
CheckReport check_minor_identities(const RankTable& tbl);

/// Claim 1: with |T_t| = 1, slicing at s then deleting t equals deleting t
/// then slicing at s (and T_s is unchanged by deleting t).
/// Claims 2 and 3: for s != t with |T_s|, |T_t| >= 2, the sliced range has a
/// single point exactly when one of the three rank equalities holds.
CheckReport check_claims(const RankTable& tbl);

/// The matroid/polymatroid correspondence identity in fraction-free form.
CheckReport check_correspondence(const MatroidTable& m);

/// Recursion under every pivot strategy (with and without cache) equals the
/// bases expansion; T(1,1) counts bases; (x + y - 1) divides T when n >= 1.
CheckReport check_equivalence(const RankTable& tbl);

}  // namespace ptutte
