// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ptutte/activity.hpp"
#include "ptutte/checks.hpp"
#include "ptutte/gen.hpp"
#include "ptutte/lattice.hpp"
#include "ptutte/matroid.hpp"
#include "ptutte/recursion.hpp"

using namespace ptutte;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Tally {
  std::size_t checks = 0, failed = 0;
  std::string first_failure;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failed++ == 0) first_failure = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failed == 0) return {true, summary + ", " + std::to_string(checks) + " checks"};
    return {false, std::to_string(failed) + "/" + std::to_string(checks) + " failed, first: " + first_failure};
  }
};

std::string table_digest(const MatroidTable& m) {
  std::string s = "n=" + std::to_string(m.size()) + " f=";
  for (Rank v : m.rank().values()) s += std::to_string(v) + ",";
  return s;
}

std::vector<CorpusEntry> primary_corpus() {
  CorpusOptions opt;
  opt.uniform_max_n = 6;
  opt.graphic_max_edges = 5;
  opt.random_count = 200;
  opt.random_max_n = 5;
  opt.random_bound = 5;
  opt.seed = 1;
  return build_corpus(opt);
}

std::vector<CorpusEntry> extended_corpus() {
  CorpusOptions opt;
  opt.mixture_count = 200;
  opt.boundary = true;
  opt.exhaustive_small = true;
  return build_corpus(opt);
}

std::vector<MatroidTable> matroid_catalog() {
  std::vector<MatroidTable> all = uniform_catalog(6);
  for (auto& m : graphic_catalog(5)) all.push_back(std::move(m));
  return all;
}

BiPoly parse(const char* s) { return BiPoly::parse(s); }

Outcome recursion_equals_expansion() {
  const auto start = std::chrono::steady_clock::now();
  const auto corpus = primary_corpus();
  Tally tally;
  std::size_t uniform = 0, graphic = 0, random = 0;
  for (const auto& e : corpus) {
    const bool r = e.name.rfind("random", 0) == 0;
    if (r && (e.table.size() > 5 || e.table.size() < 1)) tally.expect(false, e.name + " outside n <= 5");
    for (Rank v : e.table.values())
      if (r && (v > 5 || v < -5)) tally.expect(false, e.name + " outside |f| <= 5");
    tally.expect(tutte_recursive(e.table) == tutte_expansion(e.table), e.name);
    uniform += e.name.rfind("uniform", 0) == 0;
    graphic += e.name.rfind("graphic", 0) == 0;
    random += r;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  tally.expect(random >= 200, "fewer than 200 random tables");
  tally.expect(seconds < 60.0, "runtime over 60 s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu uniform, %zu graphic, %zu random tables in %.2f s", uniform, graphic, random,
                seconds);
  return tally.outcome(buf);
}

Outcome pivot_independence() {
  Tally tally;
  const auto corpus = primary_corpus();
  for (const auto& e : corpus) {
    MemoCache cache;
    const BiPoly ref = tutte_recursive(e.table, PivotStrategy::LastElement, &cache);
    for (PivotStrategy s : kAllStrategies) {
      tally.expect(tutte_recursive(e.table, s) == ref, e.name + " strategy " + std::string(strategy_name(s)));
      tally.expect(tutte_recursive(e.table, s, &cache) == ref, e.name + " cached " + std::string(strategy_name(s)));
    }
  }
  return tally.outcome(std::to_string(corpus.size()) + " tables x 4 strategies");
}

Outcome order_independence() {
  Tally tally;
  oracle::SplitMix rng(1007);
  std::size_t tables = 0;
  for (std::uint64_t seed = 500; tables < 60; ++seed, ++tables) {
    const std::size_t n = 1 + seed % 5;
    const RankTable t = tables % 2 == 0 ? random_submodular(n, seed, 5) : random_mixture(n, seed, 5);
    const BiPoly ref = tutte_expansion(t);
    for (int k = 0; k < 6; ++k) {
      std::vector<Element> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
      rng.shuffle(order);
      tally.expect(tutte_expansion(t, order) == ref, "seed " + std::to_string(seed));
    }
  }
  return tally.outcome(std::to_string(tables) + " tables x 6 orders");
}

Outcome suite_over(const std::vector<CorpusEntry>& corpus, const std::function<CheckReport(const RankTable&)>& run,
                   const std::string& label) {
  std::size_t checks = 0, failed = 0;
  std::string first;
  for (const auto& e : corpus) {
    const CheckReport r = run(e.table);
    checks += r.checks;
    if (r.failed && failed == 0) first = e.name + ": " + (r.witnesses.empty() ? "" : r.witnesses.front());
    failed += r.failed;
  }
  if (failed) return {false, std::to_string(failed) + "/" + std::to_string(checks) + " failed, first: " + first};
  return {true, std::to_string(corpus.size()) + " tables, " + std::to_string(checks) + " " + label};
}

Outcome minor_identities() {
  auto corpus = primary_corpus();
  for (auto& e : extended_corpus()) corpus.push_back(std::move(e));
  return suite_over(corpus, check_minor_identities, "identities");
}

// Counts boundary pairs (s, t) with both ranges wide where each rank equality holds.
std::string boundary_coverage(bool& all_hit) {
  std::size_t i_hits = 0, ii_hits = 0, iii_hits = 0;
  for (const auto& t : boundary_tables()) {
    const Mask full = t.full();
    for (Element s = 1; s <= t.size(); ++s)
      for (Element u = 1; u <= t.size(); ++u) {
        if (s == u || pivot_data(t, s).range_size() < 2 || pivot_data(t, u).range_size() < 2) continue;
        const Mask sb = element_bit(s), ub = element_bit(u);
        const bool ii = t(sb | ub) + t(full & ~(sb | ub)) == t(full);
        i_hits += !ii && t(full & ~sb) + t(sb | ub) == t(full) + t(ub);
        ii_hits += ii;
        iii_hits += !ii && t(full & ~(sb | ub)) + t(sb) == t(full & ~ub);
      }
  }
  all_hit = i_hits && ii_hits && iii_hits;
  return "boundary pairs hitting (i) " + std::to_string(i_hits) + ", (ii) " + std::to_string(ii_hits) + ", (iii) " +
         std::to_string(iii_hits);
}

Outcome claims() {
  auto corpus = primary_corpus();
  for (auto& e : extended_corpus()) corpus.push_back(std::move(e));
  Outcome o = suite_over(corpus, check_claims, "claim checks");
  bool all_hit = false;
  const std::string coverage = boundary_coverage(all_hit);
  if (!all_hit) return {false, coverage};
  if (o.ok) o.detail += "; " + coverage;
  return o;
}

Outcome matroid_agreement() {
  Tally tally;
  const auto catalog = matroid_catalog();
  for (const auto& m : catalog) {
    const BiPoly a = tutte_rank_generating(m);
    tally.expect(tutte_deletion_contraction(m) == a, table_digest(m));
    tally.expect(tutte_bases_activities(m) == a, table_digest(m));
  }
  const MatroidTable u12 = uniform_matroid(1, 2);
  const MatroidTable k3 = graphic_matroid({3, {{1, 2}, {2, 3}, {1, 3}}});
  tally.expect(tutte_rank_generating(u12) == parse("x + y"), "T(U_{1,2})");
  tally.expect(tutte_deletion_contraction(k3) == parse("x^2 + x + y"), "T(K_3) deletion-contraction");
  tally.expect(tutte_rank_generating(k3) == parse("x^2 + x + y"), "T(K_3) rank generating");
  tally.expect(oracle::poly_of(oracle::matroid_tutte(k3.rank())) == parse("x^2 + x + y"), "T(K_3) oracle");
  return tally.outcome(std::to_string(catalog.size()) + " matroids");
}

Outcome correspondence() {
  Tally tally;
  const auto catalog = matroid_catalog();
  for (const auto& m : catalog) tally.expect(correspondence_check(m), table_digest(m));
  const CorrespondenceSides u = correspondence_sides(uniform_matroid(1, 2));
  tally.expect(u.polymatroid_side == parse("x^2*y + x*y^2"), "U_{1,2} polymatroid side");
  tally.expect(u.matroid_side == parse("x^2*y + x*y^2"), "U_{1,2} matroid side");
  return tally.outcome(std::to_string(catalog.size()) + " matroids");
}

Outcome base_cases() {
  Tally tally;
  for (PivotStrategy s : kAllStrategies) tally.expect(tutte_recursive(RankTable(), s) == BiPoly::constant(1), "n=0");
  tally.expect(tutte_expansion(RankTable()) == BiPoly::constant(1), "n=0 expansion");
  for (Rank c = -5; c <= 5; ++c) {
    const RankTable t(1, {0, c});
    tally.expect(tutte_recursive(t) == parse("x + y - 1"), "n=1 recursion");
    tally.expect(tutte_expansion(t) == parse("x + y - 1"), "n=1 expansion");
  }
  return tally.outcome("n = 0 and n = 1");
}

// T(x, 1 - x) as an exact univariate polynomial; zero iff x + y - 1 divides T.
bool divisible(const BiPoly& p) {
  const BiPoly one_minus_x = BiPoly::constant(1) - BiPoly::x();
  BiPoly r;
  for (const auto& [e, c] : p.terms()) r += BiPoly::monomial(c, e.x, 0) * pow(one_minus_x, e.y);
  return r.is_zero();
}

Outcome counting() {
  Tally tally;
  auto corpus = primary_corpus();
  for (auto& e : extended_corpus()) corpus.push_back(std::move(e));
  for (const auto& e : corpus) {
    const BiPoly t = tutte_recursive(e.table);
    const std::size_t brute = oracle::bases(e.table).size();
    tally.expect(t.eval(1, 1) == count_bases(e.table), e.name + " eval vs count");
    tally.expect(count_bases(e.table) == brute, e.name + " count vs brute force");
    if (e.table.size() >= 1) tally.expect(divisible(t), e.name + " divisibility");
  }
  return tally.outcome(std::to_string(corpus.size()) + " tables");
}

Outcome enumeration() {
  Tally tally;
  auto corpus = primary_corpus();
  for (auto& e : extended_corpus()) corpus.push_back(std::move(e));
  std::size_t used = 0;
  for (const auto& e : corpus) {
    if (e.table.size() > 5) continue;
    ++used;
    tally.expect(enumerate_bases(e.table) == oracle::bases(e.table), e.name);
  }
  return tally.outcome(std::to_string(used) + " tables with n <= 5");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"recursion equals expansion", recursion_equals_expansion},
      {"pivot independence", pivot_independence},
      {"order independence", order_independence},
      {"minor identities", minor_identities},
      {"claims 1-3", claims},
      {"matroid three-way agreement", matroid_agreement},
      {"correspondence identity", correspondence},
      {"base cases", base_cases},
      {"counting consistency", counting},
      {"enumeration oracle", enumeration},
  };
  int failures = 0;
  int k = 0;
  for (const auto& c : criteria) {
    ++k;
    const Outcome o = c.run();
    std::printf("%s [%d] %s: %s\n", o.ok ? "PASS" : "FAIL", k, c.name, o.detail.c_str());
    failures += !o.ok;
  }
  std::printf("%d/%d criteria passed\n", k - failures, k);
  return failures == 0 ? 0 : 1;
}
