#pragma once

#include <span>
#include <vector>

#include "ptutte/bipoly.hpp"
#include "ptutte/ranks.hpp"

namespace ptutte {

/// Checks (r1) 0 <= r(E') <= |E'|, (r2) monotonicity and (r3) submodularity,
/// in that order, reporting the first violation found.
Validation validate_matroid(const RankTable& tbl);

/// A rank table known to satisfy the matroid rank axioms.
class MatroidTable {
 public:
  /// Throws Error(Precondition) if `rank` is not a matroid rank function.
  explicit MatroidTable(RankTable rank);

  const RankTable& rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return rank_.size(); }
  Rank rank_of_ground_set() const { return rank_.total(); }

  friend bool operator==(const MatroidTable&, const MatroidTable&) = default;

 private:
  RankTable rank_;
};

/// Sum over A of (x - 1)^(r(E) - r(A)) (y - 1)^(|A| - r(A)).
BiPoly tutte_rank_generating(const MatroidTable& m);

/// Loop / coloop / ordinary-element recursion. `priority` lists the elements
/// in the order they are eliminated; empty means largest index first.
BiPoly tutte_deletion_contraction(const MatroidTable& m, std::span<const Element> priority = {});

/// Sum over bases B of x^(internal activity) y^(external activity) for the
/// order 1 < 2 < ... < n.
BiPoly tutte_bases_activities(const MatroidTable& m);

/// Bases as subsets, ascending by mask.
std::vector<Mask> matroid_bases(const MatroidTable& m);

/// The matroid's rank function read as a polymatroid; its bases are the 0/1
/// indicator vectors of the matroid bases.
RankTable polymatroid_of_matroid(const MatroidTable& m);

/// Fraction-free form of T(u, v) under u = x/D, v = y/D, D = x + y - xy,
/// multiplied by D^n: each term c x^a y^b maps to c x^a y^b D^(n - a - b).
/// Throws Error(Precondition) if some term has a + b > n.
BiPoly homogenized_substitution(const BiPoly& poly, std::size_t n);

struct CorrespondenceSides {
  /// Sum over bases of P(M) of x^(oi+ie) y^(oe+ie) D^(n-oi-oe-ie).
  BiPoly polymatroid_side;
  /// x^(n-d) y^d T_M(x, y).
  BiPoly matroid_side;
};

CorrespondenceSides correspondence_sides(const MatroidTable& m);

/// True iff both sides of the matroid/polymatroid correspondence agree.
bool correspondence_check(const MatroidTable& m);

}  // namespace ptutte
