#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ptutte {

/// Subset of the ground set; bit (i - 1) is set iff element i belongs to it.
using Mask = std::uint32_t;
/// Ground-set element, 1-indexed.
using Element = std::size_t;
using Rank = std::int64_t;

/// Tables beyond this size are rejected outright (2^n storage).
inline constexpr std::size_t kMaxGroundSet = 16;

constexpr Mask element_bit(Element e) { return Mask{1} << (e - 1); }
constexpr Mask full_mask(std::size_t n) { return n == 0 ? Mask{0} : (Mask{1} << n) - 1; }

/// Renders a mask as "{1,3}".
std::string mask_to_string(Mask m);

/// Explicit set function f: 2^[n] -> Z indexed by subset bitmask.
///
/// The table itself is not required to be submodular; validate_polymatroid()
/// decides that. Operations documented as needing a valid table assume it.
class RankTable {
 public:
  /// The n = 0 table [0].
  RankTable();
  /// Throws Error(MalformedInput) unless values.size() == 2^n, and
  /// Error(LimitExceeded) if n > kMaxGroundSet.
  RankTable(std::size_t n, std::vector<Rank> values);

  std::size_t size() const noexcept { return n_; }
  Mask full() const noexcept { return full_mask(n_); }
  Rank operator()(Mask subset) const { return values_[subset]; }
  Rank total() const { return values_[full()]; }
  std::span<const Rank> values() const noexcept { return values_; }

  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  std::size_t n_;
  std::vector<Rank> values_;
};

enum class Axiom {
  None,
  EmptySetZero,   // f(empty) = 0
  Submodularity,  // f(I) + f(J) >= f(I u J) + f(I n J)
  UnitBound,      // (r1) 0 <= r(E') <= |E'|
  Monotonicity,   // (r2)
  RankSubmodularity,  // (r3)
};

const char* axiom_name(Axiom a);

/// Outcome of an axiom check. On failure `first`/`second` witness the
/// violation (second is unused for single-set axioms).
struct Validation {
  Axiom axiom = Axiom::None;
  Mask first = 0;
  Mask second = 0;

  bool ok() const noexcept { return axiom == Axiom::None; }
  std::string describe() const;
};

/// Checks f(empty) = 0 and submodularity. Uses the local form
/// f(I+a) + f(I+b) >= f(I+a+b) + f(I), which is equivalent and O(2^n n^2).
Validation validate_polymatroid(const RankTable& tbl);

/// Throws Error(Precondition) describing the violation if the table is not a
/// polymatroid rank function.
void require_polymatroid(const RankTable& tbl);

/// Feasible range of coordinate t over the bases: [alpha, beta] with
/// alpha = f([n]) - f([n] \ t) and beta = f({t}).
struct PivotData {
  Element t = 0;
  Rank alpha = 0;
  Rank beta = 0;

  std::size_t range_size() const noexcept { return static_cast<std::size_t>(beta - alpha + 1); }
  bool contains(Rank j) const noexcept { return alpha <= j && j <= beta; }
};

/// Throws Error(OutOfRange) unless 1 <= t <= n.
PivotData pivot_data(const RankTable& tbl, Element t);

/// Inserts a zero bit for element t into a mask over [n] \ {t} relabeled to
/// [n - 1]: elements below t keep their index, elements above shift down.
constexpr Mask lift_mask(Mask reduced, Element t) {
  const Mask low = reduced & (element_bit(t) - 1);
  const Mask high = (reduced & ~(element_bit(t) - 1)) << 1;
  return low | high;
}

/// Index of element e after t has been removed from the ground set.
constexpr Element shift_after_removal(Element e, Element t) { return e > t ? e - 1 : e; }

/// Deletion P \ t: f'(T) = f(T).
RankTable delete_element(const RankTable& tbl, Element t);
/// Contraction P / t: f'(T) = f(T u t) - f({t}).
RankTable contract_element(const RankTable& tbl, Element t);
/// Projection of the bases with a_t = j onto [n] \ {t}:
/// f'(I) = min{f(I), f(I u t) - j}. Throws Error(OutOfRange) if j is outside
/// the pivot range of t.
RankTable slice(const RankTable& tbl, Element t, Rank j);

/// Relabels the ground set: sigma[i - 1] is the image of element i, and
/// f'(sigma(I)) = f(I). Throws Error(MalformedInput) if sigma is not a
/// permutation of [n].
RankTable permute(const RankTable& tbl, std::span<const Element> sigma);

/// Throws Error(MalformedInput) unless `order` is a permutation of [n].
void require_permutation(std::span<const Element> order, std::size_t n);

}  // namespace ptutte
