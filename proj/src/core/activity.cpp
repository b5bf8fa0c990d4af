#include "ptutte/activity.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "ptutte/error.hpp"

namespace ptutte {

std::size_t ActivityProfile::oi() const noexcept {
  return static_cast<std::size_t>(std::popcount(internal & ~external));
}
std::size_t ActivityProfile::oe() const noexcept {
  return static_cast<std::size_t>(std::popcount(external & ~internal));
}
std::size_t ActivityProfile::ie() const noexcept {
  return static_cast<std::size_t>(std::popcount(internal & external));
}

namespace {

std::vector<Element> resolve_order(std::span<const Element> order, std::size_t n) {
  if (order.empty()) {
    std::vector<Element> identity(n);
    std::iota(identity.begin(), identity.end(), Element{1});
    return identity;
  }
  require_permutation(order, n);
  return {order.begin(), order.end()};
}

class ExchangeOracle {
 public:
  ExchangeOracle(const RankTable& tbl, std::span<const Rank> a, const ExpansionOptions& options)
      : tbl_(tbl), a_(a), sums_(a), options_(options) {}

  // Is a - e_from + e_to in P?
  bool stays(Element from, Element to) const {
    const bool fast = exchange_is_member(tbl_, sums_, from, to);
    if (options_.verify_membership) {
      BasisVector moved(a_.begin(), a_.end());
      --moved[from - 1];
      ++moved[to - 1];
      if (member(tbl_, moved) != fast) {
        throw Error(ErrorCode::Precondition, "incremental membership check disagrees with full check");
      }
    }
    return fast;
  }

 private:
  const RankTable& tbl_;
  std::span<const Rank> a_;
  SubsetSums sums_;
  const ExpansionOptions& options_;
};

ActivityProfile profile_of(const RankTable& tbl, std::span<const Rank> a, const std::vector<Element>& order,
                           const ExpansionOptions& options) {
  const ExchangeOracle oracle(tbl, a, options);
  ActivityProfile prof;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const Element i = order[pos];
    bool internal = true;
    bool external = true;
    for (std::size_t earlier = 0; earlier < pos && (internal || external); ++earlier) {
      const Element j = order[earlier];
      if (internal && oracle.stays(i, j)) internal = false;
      if (external && oracle.stays(j, i)) external = false;
    }
    if (internal) prof.internal |= element_bit(i);
    if (external) prof.external |= element_bit(i);
  }
  return prof;
}

}  // namespace

ActivityProfile activities(const RankTable& tbl, std::span<const Rank> a, std::span<const Element> order,
                           const ExpansionOptions& options) {
  if (!member(tbl, a)) throw Error(ErrorCode::Precondition, "vector is not a basis of the polymatroid");
  return profile_of(tbl, a, resolve_order(order, tbl.size()), options);
}

BiPoly tutte_expansion(const RankTable& tbl, std::span<const Element> order, const ExpansionOptions& options) {
  require_polymatroid(tbl);
  const std::vector<Element> resolved = resolve_order(order, tbl.size());

  // Bases sharing (oi, oe, ie) contribute identical terms.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::uint64_t> histogram;
  for (const BasisVector& a : enumerate_bases(tbl)) {
    const ActivityProfile prof = profile_of(tbl, a, resolved, options);
    ++histogram[{prof.oi(), prof.oe(), prof.ie()}];
  }

  const BiPoly factor = x_plus_y_minus_one();
  BiPoly total;
  for (const auto& [key, count] : histogram) {
    const auto [oi, oe, ie] = key;
    const BiPoly term = BiPoly::monomial(BigInt(count), static_cast<std::uint32_t>(oi),
                                         static_cast<std::uint32_t>(oe)) *
                        pow(factor, static_cast<std::uint32_t>(ie));
    total += term;
  }
  return total;
}

}  // namespace ptutte
