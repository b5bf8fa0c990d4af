#include "ptutte/lattice.hpp"

#include <algorithm>
#include <bit>

#include "ptutte/error.hpp"

namespace ptutte {

namespace {

void require_length(const RankTable& tbl, std::size_t len) {
  if (len != tbl.size()) {
    throw Error(ErrorCode::MalformedInput, "basis vector has length " + std::to_string(len) +
                                               ", table has n=" + std::to_string(tbl.size()));
  }
}

void append_bases(const RankTable& tbl, std::vector<BasisVector>& out) {
  const std::size_t n = tbl.size();
  if (n == 0) {
    out.emplace_back();
    return;
  }
  const PivotData pd = pivot_data(tbl, n);
  for (Rank j = pd.alpha; j <= pd.beta; ++j) {
    const std::size_t first = out.size();
    append_bases(slice(tbl, n, j), out);
    for (std::size_t k = first; k < out.size(); ++k) out[k].push_back(j);
  }
}

std::uint64_t count_recursive(const RankTable& tbl) {
  const std::size_t n = tbl.size();
  if (n == 0) return 1;
  const PivotData pd = pivot_data(tbl, n);
  std::uint64_t total = 0;
  for (Rank j = pd.alpha; j <= pd.beta; ++j) total += count_recursive(slice(tbl, n, j));
  return total;
}

}  // namespace

bool member(const RankTable& tbl, std::span<const Rank> a) {
  require_length(tbl, a.size());
  const SubsetSums sums(a);
  if (sums[tbl.full()] != tbl.total()) return false;
  for (Mask subset = 0; subset <= tbl.full(); ++subset) {
    if (sums[subset] > tbl(subset)) return false;
    if (subset == tbl.full()) break;
  }
  return true;
}

SubsetSums::SubsetSums(std::span<const Rank> a) : sums_(std::size_t{1} << a.size(), 0) {
  for (Mask subset = 1; subset < sums_.size(); ++subset) {
    const int low = std::countr_zero(subset);
    sums_[subset] = sums_[subset & (subset - 1)] + a[static_cast<std::size_t>(low)];
  }
}

bool exchange_is_member(const RankTable& tbl, const SubsetSums& sums, Element from, Element to) {
  const Mask to_bit = element_bit(to);
  const Mask rest = tbl.full() & ~to_bit & ~element_bit(from);
  // Walk every submask of `rest`, each joined with `to`.
  Mask sub = rest;
  for (;;) {
    const Mask subset = sub | to_bit;
    if (sums[subset] + 1 > tbl(subset)) return false;
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
  return true;
}

std::vector<BasisVector> enumerate_bases(const RankTable& tbl) {
  std::vector<BasisVector> out;
  append_bases(tbl, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t count_bases(const RankTable& tbl) { return count_recursive(tbl); }

}  // namespace ptutte
