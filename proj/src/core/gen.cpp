#include "ptutte/gen.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "ptutte/error.hpp"

namespace ptutte {

namespace {

// Unbiased draw in [lo, hi]; std::uniform_int_distribution is not
// reproducible across standard libraries.
Rank draw(std::mt19937_64& rng, Rank lo, Rank hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<Rank>(v % span);
}

Rank max_abs(const RankTable& t) {
  Rank m = 0;
  for (Rank v : t.values()) m = std::max(m, v < 0 ? -v : v);
  return m;
}

void require_valid_output(const RankTable& t, const char* who) {
  const Validation v = validate_polymatroid(t);
  if (!v.ok()) throw Error(ErrorCode::Precondition, std::string(who) + " produced an invalid table: " + v.describe());
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

MatroidTable uniform_matroid(std::size_t d, std::size_t n) {
  if (d > n) {
    throw Error(ErrorCode::OutOfRange, "uniform matroid needs d <= n, got d=" + std::to_string(d) +
                                           " n=" + std::to_string(n));
  }
  if (n > kMaxGroundSet) throw Error(ErrorCode::LimitExceeded, "uniform matroid ground set too large");
  std::vector<Rank> values(std::size_t{1} << n);
  for (Mask a = 0; a < values.size(); ++a) {
    values[a] = std::min<Rank>(std::popcount(a), static_cast<Rank>(d));
  }
  return MatroidTable(RankTable(n, std::move(values)));
}

MatroidTable graphic_matroid(const GraphSpec& g) {
  const std::size_t m = g.edges.size();
  if (m > kMaxGroundSet) {
    throw Error(ErrorCode::LimitExceeded, "graph has " + std::to_string(m) + " edges, limit is " +
                                              std::to_string(kMaxGroundSet));
  }
  for (const auto& [u, v] : g.edges) {
    if (u < 1 || v < 1 || u > g.vertices || v > g.vertices) {
      throw Error(ErrorCode::MalformedInput, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                                 ") outside vertex range [1, " + std::to_string(g.vertices) + "]");
    }
  }
  std::vector<Rank> values(std::size_t{1} << m);
  for (Mask a = 0; a < values.size(); ++a) {
    UnionFind uf(g.vertices + 1);
    Rank merges = 0;
    for (std::size_t e = 0; e < m; ++e) {
      if (a & (Mask{1} << e)) merges += uf.unite(g.edges[e].first, g.edges[e].second) ? 1 : 0;
    }
    values[a] = merges;
  }
  return MatroidTable(RankTable(m, std::move(values)));
}

RankTable concave_plus_modular(std::span<const Rank> g, std::span<const Rank> w) {
  const std::size_t n = w.size();
  if (g.size() != n + 1) {
    throw Error(ErrorCode::MalformedInput, "concave part needs n + 1 = " + std::to_string(n + 1) + " values");
  }
  if (g[0] != 0) throw Error(ErrorCode::Precondition, "concave part must satisfy g(0) = 0");
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    if (g[k + 1] - g[k] > g[k] - g[k - 1]) {
      throw Error(ErrorCode::Precondition, "concave part has increasing increment at " + std::to_string(k));
    }
  }
  std::vector<Rank> values(std::size_t{1} << n);
  for (Mask a = 0; a < values.size(); ++a) {
    Rank v = g[static_cast<std::size_t>(std::popcount(a))];
    for (std::size_t i = 0; i < n; ++i) {
      if (a & (Mask{1} << i)) v += w[i];
    }
    values[a] = v;
  }
  return RankTable(n, std::move(values));
}

RankTable random_submodular(std::size_t n, std::uint64_t seed, Rank value_bound) {
  if (n > 10) throw Error(ErrorCode::LimitExceeded, "random_submodular supports n <= 10");
  if (value_bound < 1) throw Error(ErrorCode::OutOfRange, "value bound must be positive");
  std::mt19937_64 rng(seed);

  std::vector<Rank> increments(n);
  std::vector<Rank> weights(n);
  auto build = [&] {
    std::vector<Rank> g(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) g[k + 1] = g[k] + increments[k];
    return concave_plus_modular(g, weights);
  };

  constexpr int kAttempts = 128;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const Rank spread = std::max<Rank>(1, value_bound >> (attempt / 16));
    for (auto& d : increments) d = draw(rng, -spread, spread);
    std::sort(increments.begin(), increments.end(), std::greater<>());
    for (auto& w : weights) w = draw(rng, -spread, spread);
    RankTable t = build();
    if (max_abs(t) <= value_bound) {
      require_valid_output(t, "random_submodular");
      return t;
    }
  }
  // Halving toward zero keeps increments sorted, so the table stays submodular.
  for (;;) {
    for (auto& d : increments) d /= 2;
    for (auto& w : weights) w /= 2;
    RankTable t = build();
    if (max_abs(t) <= value_bound) {
      require_valid_output(t, "random_submodular");
      return t;
    }
  }
}

RankTable random_mixture(std::size_t n, std::uint64_t seed, Rank value_bound) {
  if (n > 10) throw Error(ErrorCode::LimitExceeded, "random_mixture supports n <= 10");
  if (value_bound < 1) throw Error(ErrorCode::OutOfRange, "value bound must be positive");
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  const std::size_t size = std::size_t{1} << n;

  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<Rank> values(size, 0);
    const Rank components = draw(rng, 1, 3);
    for (Rank c = 0; c < components; ++c) {
      const Mask support = static_cast<Mask>(draw(rng, 0, static_cast<Rank>(size) - 1));
      const Rank cap = draw(rng, 1, std::max<Rank>(1, std::popcount(support)));
      const Rank scale = draw(rng, 1, 2);
      for (Mask a = 0; a < size; ++a) {
        values[a] += scale * std::min<Rank>(std::popcount(a & support), cap);
      }
    }
    std::vector<Rank> w(n);
    for (auto& x : w) x = draw(rng, -2, 2);
    for (Mask a = 0; a < size; ++a) {
      for (std::size_t i = 0; i < n; ++i) {
        if (a & (Mask{1} << i)) values[a] += w[i];
      }
    }
    RankTable t(n, std::move(values));
    if (max_abs(t) <= value_bound) {
      require_valid_output(t, "random_mixture");
      return t;
    }
  }
  return random_submodular(n, seed, value_bound);
}

RankTable direct_sum(const RankTable& a, const RankTable& b) {
  const std::size_t n = a.size() + b.size();
  if (n > kMaxGroundSet) throw Error(ErrorCode::LimitExceeded, "direct sum too large");
  std::vector<Rank> values(std::size_t{1} << n);
  for (Mask s = 0; s < values.size(); ++s) {
    values[s] = a(s & a.full()) + b(s >> a.size());
  }
  return RankTable(n, std::move(values));
}

std::vector<RankTable> all_submodular(std::size_t n, Rank bound) {
  if (bound < 0) throw Error(ErrorCode::OutOfRange, "bound must be nonnegative");
  const std::size_t free_values = (std::size_t{1} << n) - 1;
  const auto base = static_cast<double>(2 * bound + 1);
  double candidates = 1;
  for (std::size_t k = 0; k < free_values; ++k) candidates *= base;
  if (candidates > 1e7) throw Error(ErrorCode::LimitExceeded, "exhaustive enumeration too large");

  std::vector<RankTable> out;
  std::vector<Rank> values(free_values + 1, 0);
  std::fill(values.begin() + 1, values.end(), -bound);
  for (;;) {
    RankTable t(n, values);
    if (validate_polymatroid(t).ok()) out.push_back(std::move(t));
    std::size_t k = 1;
    while (k <= free_values && values[k] == bound) values[k++] = -bound;
    if (k > free_values) break;
    ++values[k];
  }
  return out;
}

std::vector<RankTable> boundary_tables() {
  const RankTable pair(2, {0, 2, 2, 3});
  const RankTable wide(2, {0, 3, 2, 4});
  return {
      RankTable(3, {0, 0, 0, 0, 1, 1, 1, 0}),
      RankTable(3, {0, 0, 1, 0, 1, 0, 1, 0}),
      RankTable(3, {0, 0, 0, 0, 2, 1, 1, 0}),
      RankTable(3, {0, 0, 0, 0, 1, 0, 1, 0}),
      RankTable(2, {0, -2, 1, -2}),
      direct_sum(pair, pair),
      direct_sum(pair, wide),
      direct_sum(wide, RankTable(1, {0, 3})),
      direct_sum(RankTable(3, {0, 0, 0, 0, 1, 1, 1, 0}), pair),
  };
}

std::vector<MatroidTable> uniform_catalog(std::size_t max_n) {
  std::vector<MatroidTable> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::size_t d = 0; d <= n; ++d) out.push_back(uniform_matroid(d, n));
  }
  return out;
}

std::vector<MatroidTable> graphic_catalog(std::size_t max_edges) {
  std::vector<MatroidTable> out;
  std::set<std::vector<Rank>> seen;
  GraphSpec g;

  // Vertices are introduced in order of first appearance, so each edge may
  // touch at most two vertices beyond those already used.
  std::function<void(std::size_t)> extend = [&](std::size_t used) {
    g.vertices = std::max<std::size_t>(used, 1);
    MatroidTable m = graphic_matroid(g);
    std::vector<Rank> key(m.rank().values().begin(), m.rank().values().end());
    key.push_back(static_cast<Rank>(m.size()));
    if (seen.insert(std::move(key)).second) out.push_back(std::move(m));
    if (g.edges.size() == max_edges) return;
    for (std::size_t u = 1; u <= used + 1; ++u) {
      const std::size_t v_max = u <= used ? used + 1 : used + 2;
      for (std::size_t v = u; v <= v_max; ++v) {
        g.edges.emplace_back(u, v);
        extend(std::max({used, u, v}));
        g.edges.pop_back();
      }
    }
  };
  extend(0);
  return out;
}

std::vector<CorpusEntry> build_corpus(const CorpusOptions& options) {
  std::vector<CorpusEntry> out;
  if (options.uniform_max_n) {
    for (const MatroidTable& m : uniform_catalog(*options.uniform_max_n)) {
      out.push_back({"uniform(d=" + std::to_string(m.rank_of_ground_set()) + ",n=" + std::to_string(m.size()) + ")",
                     m.rank(), true});
    }
  }
  if (options.graphic_max_edges) {
    std::size_t k = 0;
    for (const MatroidTable& m : graphic_catalog(*options.graphic_max_edges)) {
      out.push_back({"graphic#" + std::to_string(k++), m.rank(), true});
    }
  }
  for (std::size_t k = 0; k < options.random_count; ++k) {
    const std::size_t n = options.random_max_n == 0 ? 0 : 1 + k % options.random_max_n;
    const std::uint64_t seed = options.seed + k;
    out.push_back({"random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) +
                       ",bound=" + std::to_string(options.random_bound) + ")",
                   random_submodular(n, seed, options.random_bound), false});
  }
  for (std::size_t k = 0; k < options.mixture_count; ++k) {
    const std::size_t n = options.random_max_n == 0 ? 0 : 1 + k % options.random_max_n;
    const std::uint64_t seed = options.seed + k;
    out.push_back({"mixture(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) +
                       ",bound=" + std::to_string(options.random_bound) + ")",
                   random_mixture(n, seed, options.random_bound), false});
  }
  if (options.boundary) {
    std::size_t k = 0;
    for (RankTable& t : boundary_tables()) out.push_back({"boundary#" + std::to_string(k++), std::move(t), false});
  }
  if (options.exhaustive_small) {
    std::size_t k = 0;
    for (RankTable& t : all_submodular(2, 2)) out.push_back({"small2#" + std::to_string(k++), std::move(t), false});
    k = 0;
    for (RankTable& t : all_submodular(3, 1)) out.push_back({"small3#" + std::to_string(k++), std::move(t), false});
  }
  for (CorpusEntry& e : out) {
    if (!e.matroid) e.matroid = validate_matroid(e.table).ok();
  }
  return out;
}

}  // namespace ptutte
