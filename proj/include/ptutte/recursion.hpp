#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ptutte/bipoly.hpp"
#include "ptutte/ranks.hpp"

namespace ptutte {

enum class PivotStrategy {
  LastElement,
  FirstElement,
  MinRange,  // smallest |T_t|, ties to the smallest index
  MaxRange,  // largest |T_t|, ties to the smallest index
};

inline constexpr PivotStrategy kAllStrategies[] = {PivotStrategy::LastElement, PivotStrategy::FirstElement,
                                                   PivotStrategy::MinRange, PivotStrategy::MaxRange};

/// "last", "first", "min-range", "max-range".
std::string_view strategy_name(PivotStrategy s);
std::optional<PivotStrategy> parse_strategy(std::string_view name);

/// Memoization key: the raw table. Order-sensitive, so a permuted copy of a
/// table is a different key.
struct TableKey {
  std::size_t n = 0;
  std::vector<Rank> values;

  friend bool operator==(const TableKey&, const TableKey&) = default;
};

struct TableKeyHash {
  std::size_t operator()(const TableKey& key) const noexcept;
};

TableKey canonical_key(const RankTable& tbl);

/// Cache of already evaluated sub-polymatroids. Not synchronized: use one
/// cache per thread.
class MemoCache {
 public:
  const BiPoly* find(const TableKey& key) const;
  void insert(TableKey key, BiPoly value);

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t hits() const noexcept { return hits_; }
  void clear();

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::unordered_map<TableKey, BiPoly, TableKeyHash> entries_;
  mutable std::size_t hits_ = 0;
};

Element choose_pivot(const RankTable& tbl, PivotStrategy strategy);

/// Evaluates the recursion
///   T = 1                                   if n = 0
///   T = (x + y - 1) T(P \ t)                if |T_t| = 1
///   T = x T(P \ t) + y T(P / t) + sum_{alpha_t < j < beta_t} T(slice(P, t, j))
/// with the pivot t picked by `strategy`. `cache` may be null.
/// Throws Error(Precondition) on an invalid table.
BiPoly tutte_recursive(const RankTable& tbl, PivotStrategy strategy = PivotStrategy::MinRange,
                       MemoCache* cache = nullptr);

}  // namespace ptutte
