#include "ptutte/checks.hpp"

#include <sstream>

#include "ptutte/activity.hpp"
#include "ptutte/lattice.hpp"
#include "ptutte/recursion.hpp"

namespace ptutte {

void CheckReport::record(bool ok, const std::string& witness) {
  ++checks;
  if (ok) return;
  ++failed;
  if (witnesses.size() < kMaxRecordedFailures) witnesses.push_back(witness);
}

void CheckReport::merge(const CheckReport& other) {
  checks += other.checks;
  failed += other.failed;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() >= kMaxRecordedFailures) break;
    witnesses.push_back(w);
  }
}

namespace {

std::string table_text(const RankTable& tbl) {
  std::ostringstream os;
  os << "n=" << tbl.size() << " f=[";
  for (std::size_t k = 0; k < tbl.values().size(); ++k) os << (k ? "," : "") << tbl.values()[k];
  os << ']';
  return os.str();
}

std::string witness(const RankTable& tbl, const std::string& what) { return what + " on " + table_text(tbl); }

}  // namespace

CheckReport check_minor_identities(const RankTable& tbl) {
  CheckReport report;
  const std::size_t n = tbl.size();
  for (Element t = 1; t <= n; ++t) {
    const PivotData pd = pivot_data(tbl, t);
    const RankTable del = delete_element(tbl, t);
    const RankTable con = contract_element(tbl, t);
    const std::string at = "t=" + std::to_string(t);
    report.record(slice(tbl, t, pd.alpha) == del, witness(tbl, "slice at alpha != deletion, " + at));
    report.record(slice(tbl, t, pd.beta) == con, witness(tbl, "slice at beta != contraction, " + at));
    report.record(validate_polymatroid(del).ok(), witness(tbl, "deletion not a polymatroid, " + at));
    report.record(validate_polymatroid(con).ok(), witness(tbl, "contraction not a polymatroid, " + at));
    for (Rank j = pd.alpha; j <= pd.beta; ++j) {
      report.record(validate_polymatroid(slice(tbl, t, j)).ok(),
                    witness(tbl, "slice not a polymatroid, " + at + " j=" + std::to_string(j)));
    }
  }
  for (Element s = 1; s <= n; ++s) {
    for (Element t = 1; t <= n; ++t) {
      if (s == t) continue;
      const Element t_after_s = shift_after_removal(t, s);
      const Element s_after_t = shift_after_removal(s, t);
      const RankTable del_s = delete_element(tbl, s);
      const RankTable con_s = contract_element(tbl, s);
      const RankTable del_t = delete_element(tbl, t);
      const RankTable con_t = contract_element(tbl, t);
      const std::string at = "s=" + std::to_string(s) + " t=" + std::to_string(t);
      report.record(delete_element(del_s, t_after_s) == delete_element(del_t, s_after_t),
                    witness(tbl, "P\\s\\t != P\\t\\s, " + at));
      report.record(contract_element(del_s, t_after_s) == delete_element(con_t, s_after_t),
                    witness(tbl, "P\\s/t != P/t\\s, " + at));
      report.record(delete_element(con_s, t_after_s) == contract_element(del_t, s_after_t),
                    witness(tbl, "P/s\\t != P\\t/s, " + at));
      report.record(contract_element(con_s, t_after_s) == contract_element(con_t, s_after_t),
                    witness(tbl, "P/s/t != P/t/s, " + at));
    }
  }
  return report;
}

namespace {

// |T_s| of slice(tbl, t, j) == 1, with s given in the original labels.
bool sliced_range_is_point(const RankTable& tbl, Element t, Rank j, Element s) {
  return pivot_data(slice(tbl, t, j), shift_after_removal(s, t)).range_size() == 1;
}

}  // namespace

CheckReport check_claims(const RankTable& tbl) {
  CheckReport report;
  const std::size_t n = tbl.size();
  const Mask full = tbl.full();
  for (Element s = 1; s <= n; ++s) {
    for (Element t = 1; t <= n; ++t) {
      if (s == t) continue;
      const PivotData ps = pivot_data(tbl, s);
      const PivotData pt = pivot_data(tbl, t);
      const Mask sb = element_bit(s);
      const Mask tb = element_bit(t);
      const std::string at = "s=" + std::to_string(s) + " t=" + std::to_string(t);

      if (pt.range_size() == 1) {
        const RankTable del_t = delete_element(tbl, t);
        const Element s_after_t = shift_after_removal(s, t);
        const PivotData ps_after = pivot_data(del_t, s_after_t);
        report.record(ps_after.alpha == ps.alpha && ps_after.beta == ps.beta,
                      witness(tbl, "claim 1: deleting t changed T_s, " + at));
        if (ps_after.alpha != ps.alpha || ps_after.beta != ps.beta) continue;
        for (Rank i = ps.alpha; i <= ps.beta; ++i) {
          const RankTable lhs = delete_element(slice(tbl, s, i), shift_after_removal(t, s));
          const RankTable rhs = slice(del_t, s_after_t, i);
          report.record(lhs == rhs, witness(tbl, "claim 1: slice/delete do not commute, " + at +
                                                     " i=" + std::to_string(i)));
        }
      }

      if (ps.range_size() < 2 || pt.range_size() < 2) continue;

      // Claim 2: ranges of s after slicing t at j.
      const bool c2_i = tbl(full & ~sb) + tbl(sb | tb) == tbl(full) + tbl(tb);
      const bool c_ii = tbl(sb | tb) + tbl(full & ~(sb | tb)) == tbl(full);
      const bool c2_iii = tbl(full & ~(sb | tb)) + tbl(sb) == tbl(full & ~tb);
      for (Rank j = pt.alpha; j <= pt.beta; ++j) {
        const bool lhs = sliced_range_is_point(tbl, t, j, s);
        const bool rhs = (c2_i && j == pt.beta) || c_ii || (c2_iii && j == pt.alpha);
        report.record(lhs == rhs, witness(tbl, "claim 2: " + at + " j=" + std::to_string(j) +
                                                   (lhs ? " single point without condition"
                                                        : " condition holds but range is wide")));
      }

      // Claim 3: ranges of t after slicing s at i.
      const bool c3_i = tbl(full & ~tb) + tbl(sb | tb) == tbl(full) + tbl(sb);
      const bool c3_iii = tbl(full & ~(sb | tb)) + tbl(tb) == tbl(full & ~sb);
      for (Rank i = ps.alpha; i <= ps.beta; ++i) {
        const bool lhs = sliced_range_is_point(tbl, s, i, t);
        const bool rhs = (c3_i && i == ps.beta) || c_ii || (c3_iii && i == ps.alpha);
        report.record(lhs == rhs, witness(tbl, "claim 3: " + at + " i=" + std::to_string(i) +
                                                   (lhs ? " single point without condition"
                                                        : " condition holds but range is wide")));
      }
    }
  }
  return report;
}

CheckReport check_correspondence(const MatroidTable& m) {
  CheckReport report;
  const CorrespondenceSides sides = correspondence_sides(m);
  report.record(sides.polymatroid_side == sides.matroid_side,
                witness(m.rank(), "correspondence: " + sides.polymatroid_side.to_string() +
                                      " != " + sides.matroid_side.to_string()));
  const BiPoly recursive = homogenized_substitution(tutte_recursive(m.rank()), m.size());
  report.record(recursive == sides.matroid_side,
                witness(m.rank(), "correspondence via recursion: " + recursive.to_string() +
                                      " != " + sides.matroid_side.to_string()));
  return report;
}

CheckReport check_equivalence(const RankTable& tbl) {
  CheckReport report;
  const BiPoly expansion = tutte_expansion(tbl);
  for (PivotStrategy s : kAllStrategies) {
    MemoCache cache;
    const BiPoly cached = tutte_recursive(tbl, s, &cache);
    report.record(cached == expansion, witness(tbl, "recursion (" + std::string(strategy_name(s)) +
                                                        ") = " + cached.to_string() +
                                                        " != expansion " + expansion.to_string()));
    const BiPoly uncached = tutte_recursive(tbl, s, nullptr);
    report.record(uncached == cached,
                  witness(tbl, "cache changed result for strategy " + std::string(strategy_name(s))));
  }
  report.record(expansion.eval(1, 1) == BigInt(count_bases(tbl)), witness(tbl, "T(1,1) != number of bases"));
  if (tbl.size() >= 1) {
    // T restricted to the line x + y = 1 has degree <= deg T, so vanishing at
    // deg T + 1 points makes (x + y - 1) a factor.
    bool vanishes = true;
    const std::uint32_t deg = expansion.total_degree();
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(deg); ++k) {
      vanishes = vanishes && expansion.eval(k, 1 - k) == 0;
    }
    report.record(vanishes, witness(tbl, "(x + y - 1) does not divide " + expansion.to_string()));
  }
  return report;
}

}  // namespace ptutte
