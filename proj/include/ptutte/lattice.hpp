#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ptutte/ranks.hpp"

namespace ptutte {

/// Integer point (a_1, ..., a_n); entries may be negative.
using BasisVector = std::vector<Rank>;

/// True iff sum_{i in I} a_i <= f(I) for every I and the total equals f([n]).
/// Throws Error(MalformedInput) if a has the wrong length.
bool member(const RankTable& tbl, std::span<const Rank> a);

/// Sums of a over every subset, indexed by mask.
class SubsetSums {
 public:
  explicit SubsetSums(std::span<const Rank> a);

  Rank operator[](Mask subset) const { return sums_[subset]; }

 private:
  std::vector<Rank> sums_;
};

/// Decides whether a - e_from + e_to is a basis, given that a (summarised by
/// `sums`) already is one. Only subsets containing `to` and not `from` can
/// become violated, so 2^(n-2) constraints are inspected. from != to.
bool exchange_is_member(const RankTable& tbl, const SubsetSums& sums, Element from, Element to);

/// All bases in lexicographic order. Built by slicing on the highest-index
/// element: the bases with a_n = j correspond to the bases of slice(tbl, n, j).
/// Requires a valid table; n = 0 yields the single empty vector.
std::vector<BasisVector> enumerate_bases(const RankTable& tbl);

std::uint64_t count_bases(const RankTable& tbl);

}  // namespace ptutte
