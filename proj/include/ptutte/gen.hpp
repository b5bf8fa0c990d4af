#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ptutte/matroid.hpp"
#include "ptutte/ranks.hpp"

namespace ptutte {

/// U_{d,n}: r(A) = min(|A|, d). Throws Error(OutOfRange) if d > n.
MatroidTable uniform_matroid(std::size_t d, std::size_t n);

/// Multigraph with 1-indexed vertices; loops and parallel edges allowed.
struct GraphSpec {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Cycle matroid on the edge set: r(A) = |V| - #components of (V, A).
/// Throws Error(MalformedInput) on out-of-range endpoints and
/// Error(LimitExceeded) beyond kMaxGroundSet edges.
MatroidTable graphic_matroid(const GraphSpec& g);

/// f(I) = g[|I|] + sum_{i in I} w[i-1]. g must start at 0 and have
/// nonincreasing increments (concave); throws Error(Precondition) otherwise.
RankTable concave_plus_modular(std::span<const Rank> g, std::span<const Rank> w);

/// Seeded concave-of-cardinality plus modular table with every |f(I)| <=
/// value_bound. Identical arguments give identical tables. n <= 10.
RankTable random_submodular(std::size_t n, std::uint64_t seed, Rank value_bound);

/// Seeded sum of scaled truncated-cardinality terms min(|I n S|, d) plus a
/// modular part, with |f(I)| <= value_bound. Covers tables the
/// concave-of-cardinality family cannot produce.
RankTable random_mixture(std::size_t n, std::uint64_t seed, Rank value_bound);

/// Table on the disjoint union: f(I) = f_a(I n [n_a]) + f_b(rest, shifted).
RankTable direct_sum(const RankTable& a, const RankTable& b);

/// Every submodular table with f(empty) = 0 and values in [-bound, bound].
/// Throws Error(LimitExceeded) if more than 10^7 candidates would be scanned.
std::vector<RankTable> all_submodular(std::size_t n, Rank bound);

/// Hand-picked tables where the rank equalities
///   f([n]-s) + f({s,t}) = f([n]) + f({t}),
///   f({s,t}) + f([n]-{s,t}) = f([n]),
///   f([n]-{s,t}) + f({s}) = f([n]-t)
/// hold for pairs with |T_s|, |T_t| >= 2. Generic random tables almost never
/// hit these.
std::vector<RankTable> boundary_tables();

std::vector<MatroidTable> uniform_catalog(std::size_t max_n);

/// Distinct cycle-matroid tables of all multigraphs with at most `max_edges`
/// edges (every edge order, up to vertex relabeling).
std::vector<MatroidTable> graphic_catalog(std::size_t max_edges);

struct CorpusOptions {
  std::optional<std::size_t> uniform_max_n = 6;       // nullopt: no uniform matroids
  std::optional<std::size_t> graphic_max_edges = 5;   // nullopt: no graphic matroids
  std::size_t random_count = 200;
  std::size_t random_max_n = 5;
  Rank random_bound = 5;
  std::uint64_t seed = 1;
  std::size_t mixture_count = 0;
  bool boundary = false;
  bool exhaustive_small = false;  // all_submodular(2, 2) and all_submodular(3, 1)
};

struct CorpusEntry {
  std::string name;
  RankTable table;
  bool matroid = false;
};

std::vector<CorpusEntry> build_corpus(const CorpusOptions& options);

}  // namespace ptutte
