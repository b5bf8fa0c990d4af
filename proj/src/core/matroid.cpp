#include "ptutte/matroid.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <utility>

#include "ptutte/activity.hpp"
#include "ptutte/error.hpp"
#include "ptutte/lattice.hpp"

namespace ptutte {

Validation validate_matroid(const RankTable& tbl) {
  const Mask full = tbl.full();
  for (Mask s = 0;; ++s) {
    if (tbl(s) < 0 || tbl(s) > std::popcount(s)) return {Axiom::UnitBound, s, 0};
    if (s == full) break;
  }
  for (Mask s = 0;; ++s) {
    for (Element e = 1; e <= tbl.size(); ++e) {
      const Mask bigger = s | element_bit(e);
      if (bigger != s && tbl(s) > tbl(bigger)) return {Axiom::Monotonicity, s, bigger};
    }
    if (s == full) break;
  }
  Validation v = validate_polymatroid(tbl);
  if (v.axiom == Axiom::Submodularity) v.axiom = Axiom::RankSubmodularity;
  return v;
}

MatroidTable::MatroidTable(RankTable rank) : rank_(std::move(rank)) {
  const Validation v = validate_matroid(rank_);
  if (!v.ok()) throw Error(ErrorCode::Precondition, "not a matroid: " + v.describe());
}

BiPoly tutte_rank_generating(const MatroidTable& m) {
  const RankTable& r = m.rank();
  const Rank d = r.total();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> exponents;
  for (Mask a = 0;; ++a) {
    const auto corank = static_cast<std::uint32_t>(d - r(a));
    const auto nullity = static_cast<std::uint32_t>(std::popcount(a) - r(a));
    ++exponents[{corank, nullity}];
    if (a == r.full()) break;
  }
  const BiPoly x_minus_one = BiPoly::x() - BiPoly::constant(1);
  const BiPoly y_minus_one = BiPoly::y() - BiPoly::constant(1);
  BiPoly total;
  for (const auto& [e, count] : exponents) {
    total += (pow(x_minus_one, e.first) * pow(y_minus_one, e.second)).scaled(BigInt(count));
  }
  return total;
}

namespace {

// labels[k] is the original element currently at position k + 1; rank[e] is
// the elimination priority of original element e (lower goes first).
BiPoly deletion_contraction(const RankTable& r, const std::vector<Element>& labels,
                            const std::vector<std::size_t>& rank) {
  const std::size_t n = r.size();
  if (n == 0) return BiPoly::constant(1);
  Element e = 1;
  for (Element k = 2; k <= n; ++k) {
    if (rank[labels[k - 1]] < rank[labels[e - 1]]) e = k;
  }
  std::vector<Element> rest = labels;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(e - 1));

  const bool loop = r(element_bit(e)) == 0;
  const bool coloop = r(r.full() & ~element_bit(e)) == r.total() - 1;
  if (coloop) return BiPoly::x() * deletion_contraction(contract_element(r, e), rest, rank);
  if (loop) return BiPoly::y() * deletion_contraction(delete_element(r, e), rest, rank);
  return deletion_contraction(contract_element(r, e), rest, rank) +
         deletion_contraction(delete_element(r, e), rest, rank);
}

bool is_basis(const RankTable& r, Mask b) {
  return std::popcount(b) == r.total() && r(b) == r.total();
}

}  // namespace

BiPoly tutte_deletion_contraction(const MatroidTable& m, std::span<const Element> priority) {
  const std::size_t n = m.size();
  std::vector<Element> order(priority.begin(), priority.end());
  if (order.empty()) {
    order.resize(n);
    std::iota(order.rbegin(), order.rend(), Element{1});
  }
  require_permutation(order, n);
  std::vector<std::size_t> rank(n + 1);
  for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos;
  std::vector<Element> labels(n);
  std::iota(labels.begin(), labels.end(), Element{1});
  return deletion_contraction(m.rank(), labels, rank);
}

std::vector<Mask> matroid_bases(const MatroidTable& m) {
  std::vector<Mask> out;
  const RankTable& r = m.rank();
  for (Mask b = 0;; ++b) {
    if (is_basis(r, b)) out.push_back(b);
    if (b == r.full()) break;
  }
  return out;
}

BiPoly tutte_bases_activities(const MatroidTable& m) {
  const RankTable& r = m.rank();
  const std::size_t n = m.size();
  BiPoly total;
  for (Mask b : matroid_bases(m)) {
    std::uint32_t internal = 0;
    std::uint32_t external = 0;
    for (Element i = 1; i <= n; ++i) {
      const Mask ib = element_bit(i);
      bool active = true;
      for (Element j = 1; j < i && active; ++j) {
        const Mask jb = element_bit(j);
        if (b & ib) {
          if (!(b & jb) && is_basis(r, (b & ~ib) | jb)) active = false;
        } else {
          if ((b & jb) && is_basis(r, (b | ib) & ~jb)) active = false;
        }
      }
      if (active) ++((b & ib) ? internal : external);
    }
    total += BiPoly::monomial(1, internal, external);
  }
  return total;
}

RankTable polymatroid_of_matroid(const MatroidTable& m) { return m.rank(); }

namespace {

BiPoly correspondence_denominator() { return BiPoly::x() + BiPoly::y() - BiPoly::monomial(1, 1, 1); }

}  // namespace

BiPoly homogenized_substitution(const BiPoly& poly, std::size_t n) {
  const BiPoly denom = correspondence_denominator();
  BiPoly out;
  for (const auto& [e, c] : poly.terms()) {
    if (e.x + e.y > n) {
      throw Error(ErrorCode::Precondition, "term degree exceeds ground-set size in homogenization");
    }
    out += BiPoly::monomial(c, e.x, e.y) * pow(denom, static_cast<std::uint32_t>(n - e.x - e.y));
  }
  return out;
}

CorrespondenceSides correspondence_sides(const MatroidTable& m) {
  const std::size_t n = m.size();
  const RankTable p = polymatroid_of_matroid(m);
  const BiPoly denom = correspondence_denominator();

  CorrespondenceSides sides;
  for (const BasisVector& a : enumerate_bases(p)) {
    const ActivityProfile prof = activities(p, a);
    const auto oi = static_cast<std::uint32_t>(prof.oi());
    const auto oe = static_cast<std::uint32_t>(prof.oe());
    const auto ie = static_cast<std::uint32_t>(prof.ie());
    sides.polymatroid_side +=
        BiPoly::monomial(1, oi + ie, oe + ie) * pow(denom, static_cast<std::uint32_t>(n) - oi - oe - ie);
  }
  const auto d = static_cast<std::uint32_t>(m.rank_of_ground_set());
  sides.matroid_side = BiPoly::monomial(1, static_cast<std::uint32_t>(n) - d, d) * tutte_rank_generating(m);
  return sides;
}

bool correspondence_check(const MatroidTable& m) {
  const CorrespondenceSides sides = correspondence_sides(m);
  return sides.polymatroid_side == sides.matroid_side;
}

}  // namespace ptutte
