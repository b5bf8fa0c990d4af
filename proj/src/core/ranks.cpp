#include "ptutte/ranks.hpp"

#include <algorithm>
#include <sstream>

#include "ptutte/error.hpp"

namespace ptutte {

std::string mask_to_string(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Element e = 1; m != 0; ++e, m >>= 1) {
    if (m & 1U) {
      if (!first) os << ',';
      os << e;
      first = false;
    }
  }
  os << '}';
  return os.str();
}

RankTable::RankTable() : n_(0), values_{0} {}

RankTable::RankTable(std::size_t n, std::vector<Rank> values) : n_(n), values_(std::move(values)) {
  if (n_ > kMaxGroundSet) {
    throw Error(ErrorCode::LimitExceeded, "ground set of size " + std::to_string(n_) +
                                              " exceeds the limit of " + std::to_string(kMaxGroundSet));
  }
  const std::size_t expected = std::size_t{1} << n_;
  if (values_.size() != expected) {
    throw Error(ErrorCode::MalformedInput, "rank table for n=" + std::to_string(n_) + " needs " +
                                               std::to_string(expected) + " values, got " +
                                               std::to_string(values_.size()));
  }
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::None: return "none";
    case Axiom::EmptySetZero: return "(i) f(empty) = 0";
    case Axiom::Submodularity: return "(ii) submodularity";
    case Axiom::UnitBound: return "(r1) 0 <= r(E') <= |E'|";
    case Axiom::Monotonicity: return "(r2) monotonicity";
    case Axiom::RankSubmodularity: return "(r3) submodularity";
  }
  return "unknown";
}

std::string Validation::describe() const {
  switch (axiom) {
    case Axiom::None:
      return "ok";
    case Axiom::EmptySetZero:
    case Axiom::UnitBound:
      return std::string(axiom_name(axiom)) + " violated at " + mask_to_string(first);
    case Axiom::Submodularity:
    case Axiom::Monotonicity:
    case Axiom::RankSubmodularity:
      return std::string(axiom_name(axiom)) + " violated at I=" + mask_to_string(first) +
             ", J=" + mask_to_string(second);
  }
  return "unknown";
}

Validation validate_polymatroid(const RankTable& tbl) {
  if (tbl(0) != 0) return {Axiom::EmptySetZero, 0, 0};
  const std::size_t n = tbl.size();
  const Mask full = tbl.full();
  for (Mask base = 0;; ++base) {
    for (Element a = 1; a <= n; ++a) {
      const Mask ba = element_bit(a);
      if (base & ba) continue;
      for (Element b = a + 1; b <= n; ++b) {
        const Mask bb = element_bit(b);
        if (base & bb) continue;
        if (tbl(base | ba) + tbl(base | bb) < tbl(base | ba | bb) + tbl(base)) {
          return {Axiom::Submodularity, base | ba, base | bb};
        }
      }
    }
    if (base == full) break;
  }
  return {};
}

void require_polymatroid(const RankTable& tbl) {
  const Validation v = validate_polymatroid(tbl);
  if (!v.ok()) throw Error(ErrorCode::Precondition, "not a polymatroid: " + v.describe());
}

namespace {

void require_element(const RankTable& tbl, Element t) {
  if (t < 1 || t > tbl.size()) {
    throw Error(ErrorCode::OutOfRange, "element " + std::to_string(t) + " outside ground set [" +
                                           std::to_string(tbl.size()) + "]");
  }
}

// Builds the table on [n] \ {t}; value(I, I u t) receives masks over [n].
template <typename ValueFn>
RankTable remove_element(const RankTable& tbl, Element t, ValueFn value) {
  require_element(tbl, t);
  const std::size_t m = tbl.size() - 1;
  std::vector<Rank> values(std::size_t{1} << m);
  const Mask tb = element_bit(t);
  for (Mask reduced = 0; reduced < values.size(); ++reduced) {
    const Mask lifted = lift_mask(reduced, t);
    values[reduced] = value(lifted, lifted | tb);
  }
  return RankTable(m, std::move(values));
}

}  // namespace

PivotData pivot_data(const RankTable& tbl, Element t) {
  require_element(tbl, t);
  const Mask tb = element_bit(t);
  return {t, tbl.total() - tbl(tbl.full() & ~tb), tbl(tb)};
}

RankTable delete_element(const RankTable& tbl, Element t) {
  return remove_element(tbl, t, [&](Mask without, Mask) { return tbl(without); });
}

RankTable contract_element(const RankTable& tbl, Element t) {
  require_element(tbl, t);
  const Rank ft = tbl(element_bit(t));
  return remove_element(tbl, t, [&](Mask, Mask with) { return tbl(with) - ft; });
}

RankTable slice(const RankTable& tbl, Element t, Rank j) {
  const PivotData pd = pivot_data(tbl, t);
  if (!pd.contains(j)) {
    throw Error(ErrorCode::OutOfRange, "slice index " + std::to_string(j) + " outside [" +
                                           std::to_string(pd.alpha) + ", " + std::to_string(pd.beta) +
                                           "] for element " + std::to_string(t));
  }
  return remove_element(tbl, t,
                        [&](Mask without, Mask with) { return std::min(tbl(without), tbl(with) - j); });
}

void require_permutation(std::span<const Element> order, std::size_t n) {
  if (order.size() != n) {
    throw Error(ErrorCode::MalformedInput, "permutation has length " + std::to_string(order.size()) +
                                               ", expected " + std::to_string(n));
  }
  std::vector<bool> seen(n + 1, false);
  for (Element e : order) {
    if (e < 1 || e > n || seen[e]) {
      throw Error(ErrorCode::MalformedInput, "not a permutation of [" + std::to_string(n) + "]");
    }
    seen[e] = true;
  }
}

RankTable permute(const RankTable& tbl, std::span<const Element> sigma) {
  const std::size_t n = tbl.size();
  require_permutation(sigma, n);
  std::vector<Rank> values(tbl.values().size());
  for (Mask source = 0; source < values.size(); ++source) {
    Mask image = 0;
    for (Element e = 1; e <= n; ++e) {
      if (source & element_bit(e)) image |= element_bit(sigma[e - 1]);
    }
    values[image] = tbl(source);
  }
  return RankTable(n, std::move(values));
}

}  // namespace ptutte
