#pragma once

#include <cstddef>
#include <span>

#include "ptutte/bipoly.hpp"
#include "ptutte/lattice.hpp"
#include "ptutte/ranks.hpp"

namespace ptutte {

/// Internally and externally active indices of one basis.
struct ActivityProfile {
  Mask internal = 0;
  Mask external = 0;

  std::size_t oi() const noexcept;
  std::size_t oe() const noexcept;
  std::size_t ie() const noexcept;
};

struct ExpansionOptions {
  /// Re-check every incremental exchange test against the full membership
  /// test and throw Error(Precondition) on disagreement.
  bool verify_membership = false;
};

/// Activities of basis `a` with respect to `order`, which lists the elements
/// from first to last (empty means 1 < 2 < ... < n). Index i is internally
/// active if a - e_i + e_j leaves P for every j preceding i, externally active
/// if a + e_i - e_j leaves P for every such j.
///
/// Throws Error(Precondition) if a is not a basis, Error(MalformedInput) if
/// `order` is not a permutation.
ActivityProfile activities(const RankTable& tbl, std::span<const Rank> a,
                           std::span<const Element> order = {}, const ExpansionOptions& options = {});

/// Sum over all bases of x^oi y^oe (x + y - 1)^ie. The result does not depend
/// on `order`; individual profiles do. Requires a valid table.
BiPoly tutte_expansion(const RankTable& tbl, std::span<const Element> order = {},
                       const ExpansionOptions& options = {});

}  // namespace ptutte
