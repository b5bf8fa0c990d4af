#include "ptutte/recursion.hpp"

#include <functional>

#include "ptutte/error.hpp"

namespace ptutte {

std::string_view strategy_name(PivotStrategy s) {
  switch (s) {
    case PivotStrategy::LastElement: return "last";
    case PivotStrategy::FirstElement: return "first";
    case PivotStrategy::MinRange: return "min-range";
    case PivotStrategy::MaxRange: return "max-range";
  }
  return "unknown";
}

std::optional<PivotStrategy> parse_strategy(std::string_view name) {
  for (PivotStrategy s : kAllStrategies) {
    if (strategy_name(s) == name) return s;
  }
  return std::nullopt;
}

std::size_t TableKeyHash::operator()(const TableKey& key) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(key.n);
  for (Rank v : key.values) {
    h ^= std::hash<Rank>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

TableKey canonical_key(const RankTable& tbl) {
  return {tbl.size(), {tbl.values().begin(), tbl.values().end()}};
}

const BiPoly* MemoCache::find(const TableKey& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return nullptr;
  ++hits_;
  return &it->second;
}

void MemoCache::insert(TableKey key, BiPoly value) { entries_.insert_or_assign(std::move(key), std::move(value)); }

void MemoCache::clear() {
  entries_.clear();
  hits_ = 0;
}

Element choose_pivot(const RankTable& tbl, PivotStrategy strategy) {
  const std::size_t n = tbl.size();
  if (n == 0) throw Error(ErrorCode::OutOfRange, "no pivot in an empty ground set");
  switch (strategy) {
    case PivotStrategy::LastElement: return n;
    case PivotStrategy::FirstElement: return 1;
    case PivotStrategy::MinRange:
    case PivotStrategy::MaxRange: {
      Element best = 1;
      std::size_t best_size = pivot_data(tbl, 1).range_size();
      for (Element t = 2; t <= n; ++t) {
        const std::size_t size = pivot_data(tbl, t).range_size();
        const bool better = strategy == PivotStrategy::MinRange ? size < best_size : size > best_size;
        if (better) {
          best = t;
          best_size = size;
        }
      }
      return best;
    }
  }
  return n;
}

namespace {

BiPoly evaluate(const RankTable& tbl, PivotStrategy strategy, MemoCache* cache) {
  if (tbl.size() == 0) return BiPoly::constant(1);

  TableKey key;
  if (cache != nullptr) {
    key = canonical_key(tbl);
    if (const BiPoly* hit = cache->find(key)) return *hit;
  }

  const PivotData pd = pivot_data(tbl, choose_pivot(tbl, strategy));
  BiPoly result;
  if (pd.range_size() == 1) {
    result = x_plus_y_minus_one() * evaluate(delete_element(tbl, pd.t), strategy, cache);
  } else {
    result = BiPoly::x() * evaluate(delete_element(tbl, pd.t), strategy, cache);
    result += BiPoly::y() * evaluate(contract_element(tbl, pd.t), strategy, cache);
    for (Rank j = pd.alpha + 1; j < pd.beta; ++j) {
      result += evaluate(slice(tbl, pd.t, j), strategy, cache);
    }
  }

  if (cache != nullptr) cache->insert(std::move(key), result);
  return result;
}

}  // namespace

BiPoly tutte_recursive(const RankTable& tbl, PivotStrategy strategy, MemoCache* cache) {
  require_polymatroid(tbl);
  return evaluate(tbl, strategy, cache);
}

}  // namespace ptutte
