#include "ptutte/ptutte.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ptutte/activity.hpp"
#include "ptutte/checks.hpp"
#include "ptutte/error.hpp"
#include "ptutte/gen.hpp"
#include "ptutte/lattice.hpp"
#include "ptutte/matroid.hpp"
#include "ptutte/recursion.hpp"
#include "ptutte/table_io.hpp"

struct ptutte_table {
  ptutte::RankTable table;
  bool matroid = false;
};

struct ptutte_poly {
  ptutte::BiPoly poly;
};

struct ptutte_corpus {
  std::vector<ptutte_table> tables;
  std::vector<std::string> names;
};

static_assert(static_cast<int>(ptutte::Axiom::RankSubmodularity) == PTUTTE_AXIOM_RANK_SUBMODULARITY);
static_assert(static_cast<int>(ptutte::Axiom::EmptySetZero) == PTUTTE_AXIOM_EMPTY_SET_ZERO);
static_assert(static_cast<int>(ptutte::PivotStrategy::MaxRange) == PTUTTE_STRATEGY_MAX_RANGE);
static_assert(static_cast<int>(ptutte::PivotStrategy::LastElement) == PTUTTE_STRATEGY_LAST);

namespace {

thread_local std::string last_error;

ptutte_status status_of(ptutte::ErrorCode code) {
  switch (code) {
    case ptutte::ErrorCode::MalformedInput: return PTUTTE_ERR_PARSE;
    case ptutte::ErrorCode::OutOfRange: return PTUTTE_ERR_OUT_OF_RANGE;
    case ptutte::ErrorCode::Precondition: return PTUTTE_ERR_PRECONDITION;
    case ptutte::ErrorCode::LimitExceeded: return PTUTTE_ERR_LIMIT;
  }
  return PTUTTE_ERR_INTERNAL;
}

ptutte_status fail(ptutte_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
ptutte_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ptutte::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PTUTTE_ERR_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(PTUTTE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PTUTTE_ERR_INTERNAL, "unknown exception");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define PTUTTE_REQUIRE(cond, what) \
  do {                             \
    if (!(cond)) return fail(PTUTTE_ERR_INVALID_ARGUMENT, what); \
  } while (0)

ptutte_validation to_c(const ptutte::Validation& v) {
  ptutte_validation out{};
  out.ok = v.ok() ? 1 : 0;
  out.axiom = static_cast<ptutte_axiom>(v.axiom);
  out.first = v.first;
  out.second = v.second;
  return out;
}

std::vector<ptutte::Element> elements(const uint32_t* data, size_t len) {
  return std::vector<ptutte::Element>(data, data + len);
}

ptutte::PivotStrategy to_strategy(ptutte_strategy s) {
  switch (s) {
    case PTUTTE_STRATEGY_LAST: return ptutte::PivotStrategy::LastElement;
    case PTUTTE_STRATEGY_FIRST: return ptutte::PivotStrategy::FirstElement;
    case PTUTTE_STRATEGY_MIN_RANGE: return ptutte::PivotStrategy::MinRange;
    case PTUTTE_STRATEGY_MAX_RANGE: return ptutte::PivotStrategy::MaxRange;
  }
  throw ptutte::Error(ptutte::ErrorCode::OutOfRange, "unknown pivot strategy");
}

void require_expansion_size(const ptutte::RankTable& t) {
  if (t.size() > PTUTTE_MAX_EXPANSION_GROUND_SET) {
    throw ptutte::Error(ptutte::ErrorCode::LimitExceeded,
                        "bases expansion supports n <= " + std::to_string(PTUTTE_MAX_EXPANSION_GROUND_SET) +
                            ", got n=" + std::to_string(t.size()));
  }
}

ptutte_status emit_table(ptutte::RankTable t, bool matroid, ptutte_table** out) {
  *out = new ptutte_table{std::move(t), matroid};
  return PTUTTE_OK;
}

ptutte_status emit_poly(ptutte::BiPoly p, ptutte_poly** out) {
  *out = new ptutte_poly{std::move(p)};
  return PTUTTE_OK;
}

}  // namespace

extern "C" {

const char* ptutte_version(void) { return "0.1.0"; }

const char* ptutte_last_error(void) { return last_error.c_str(); }

void ptutte_string_free(char* s) { std::free(s); }

ptutte_status ptutte_table_from_json(const char* json, ptutte_table** out) {
  PTUTTE_REQUIRE(json != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    ptutte::LoadedTable loaded = ptutte::parse_table_json(json);
    return emit_table(std::move(loaded.table), loaded.matroid, out);
  });
}

ptutte_status ptutte_table_from_values(uint32_t n, const int64_t* values, size_t count, ptutte_table** out) {
  PTUTTE_REQUIRE(out != nullptr && (values != nullptr || count == 0), "null argument");
  return guarded([&] {
    return emit_table(ptutte::RankTable(n, std::vector<ptutte::Rank>(values, values + count)), false, out);
  });
}

ptutte_status ptutte_table_clone(const ptutte_table* table, ptutte_table** out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] { return emit_table(table->table, table->matroid, out); });
}

void ptutte_table_free(ptutte_table* table) { delete table; }

uint32_t ptutte_table_size(const ptutte_table* table) {
  return table == nullptr ? 0 : static_cast<uint32_t>(table->table.size());
}

size_t ptutte_table_values(const ptutte_table* table, int64_t* dst, size_t capacity) {
  if (table == nullptr) return 0;
  const auto values = table->table.values();
  for (size_t k = 0; k < values.size() && k < capacity && dst != nullptr; ++k) dst[k] = values[k];
  return values.size();
}

int ptutte_table_is_matroid_kind(const ptutte_table* table) { return table != nullptr && table->matroid ? 1 : 0; }

ptutte_status ptutte_table_to_json(const ptutte_table* table, char** out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = copy_string(ptutte::table_to_json(table->table, table->matroid));
    return PTUTTE_OK;
  });
}

ptutte_status ptutte_validate(const ptutte_table* table, ptutte_validation* out) {
  PTUTTE_REQUIRE(table != nullptr, "null argument");
  return table->matroid ? ptutte_validate_matroid(table, out) : ptutte_validate_polymatroid(table, out);
}

ptutte_status ptutte_validate_polymatroid(const ptutte_table* table, ptutte_validation* out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = to_c(ptutte::validate_polymatroid(table->table));
    return PTUTTE_OK;
  });
}

ptutte_status ptutte_validate_matroid(const ptutte_table* table, ptutte_validation* out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = to_c(ptutte::validate_matroid(table->table));
    return PTUTTE_OK;
  });
}

const char* ptutte_axiom_name(ptutte_axiom axiom) {
  return ptutte::axiom_name(static_cast<ptutte::Axiom>(axiom));
}

ptutte_status ptutte_pivot_data(const ptutte_table* table, uint32_t t, ptutte_pivot* out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const ptutte::PivotData pd = ptutte::pivot_data(table->table, t);
    out->alpha = pd.alpha;
    out->beta = pd.beta;
    return PTUTTE_OK;
  });
}

ptutte_status ptutte_delete(const ptutte_table* table, uint32_t t, ptutte_table** out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] { return emit_table(ptutte::delete_element(table->table, t), false, out); });
}

ptutte_status ptutte_contract(const ptutte_table* table, uint32_t t, ptutte_table** out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] { return emit_table(ptutte::contract_element(table->table, t), false, out); });
}

ptutte_status ptutte_slice(const ptutte_table* table, uint32_t t, int64_t j, ptutte_table** out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] { return emit_table(ptutte::slice(table->table, t, j), false, out); });
}

ptutte_status ptutte_permute(const ptutte_table* table, const uint32_t* sigma, size_t len, ptutte_table** out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr && (sigma != nullptr || len == 0), "null argument");
  return guarded([&] {
    return emit_table(ptutte::permute(table->table, elements(sigma, len)), table->matroid, out);
  });
}

ptutte_status ptutte_member(const ptutte_table* table, const int64_t* a, size_t len, int* out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr && (a != nullptr || len == 0), "null argument");
  return guarded([&] {
    *out = ptutte::member(table->table, std::span<const ptutte::Rank>(a, len)) ? 1 : 0;
    return PTUTTE_OK;
  });
}

ptutte_status ptutte_count_bases(const ptutte_table* table, uint64_t* out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    ptutte::require_polymatroid(table->table);
    *out = ptutte::count_bases(table->table);
    return PTUTTE_OK;
  });
}

ptutte_status ptutte_bases_json(const ptutte_table* table, char** out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    ptutte::require_polymatroid(table->table);
    *out = copy_string(ptutte::bases_to_json(ptutte::enumerate_bases(table->table)));
    return PTUTTE_OK;
  });
}

ptutte_status ptutte_tutte_expansion(const ptutte_table* table, const uint32_t* order, size_t len,
                                     ptutte_poly** out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr && (order != nullptr || len == 0), "null argument");
  return guarded([&] {
    require_expansion_size(table->table);
    const std::vector<ptutte::Element> ord = elements(order, len);
    return emit_poly(ptutte::tutte_expansion(table->table, ord), out);
  });
}

ptutte_status ptutte_tutte_recursive(const ptutte_table* table, ptutte_strategy strategy, ptutte_poly** out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    ptutte::MemoCache cache;
    return emit_poly(ptutte::tutte_recursive(table->table, to_strategy(strategy), &cache), out);
  });
}

ptutte_status ptutte_tutte_matroid(const ptutte_table* table, ptutte_matroid_method method, ptutte_poly** out) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const ptutte::MatroidTable m(table->table);
    switch (method) {
      case PTUTTE_MATROID_RANK_GENERATING: return emit_poly(ptutte::tutte_rank_generating(m), out);
      case PTUTTE_MATROID_DELETION_CONTRACTION: return emit_poly(ptutte::tutte_deletion_contraction(m), out);
      case PTUTTE_MATROID_BASES_ACTIVITIES: return emit_poly(ptutte::tutte_bases_activities(m), out);
    }
    return fail(PTUTTE_ERR_OUT_OF_RANGE, "unknown matroid method");
  });
}

ptutte_status ptutte_strategy_from_name(const char* name, ptutte_strategy* out) {
  PTUTTE_REQUIRE(name != nullptr && out != nullptr, "null argument");
  const auto parsed = ptutte::parse_strategy(name);
  if (!parsed) return fail(PTUTTE_ERR_INVALID_ARGUMENT, std::string("unknown strategy '") + name + "'");
  *out = static_cast<ptutte_strategy>(*parsed);
  return PTUTTE_OK;
}

ptutte_status ptutte_poly_from_text(const char* text, ptutte_poly** out) {
  PTUTTE_REQUIRE(text != nullptr && out != nullptr, "null argument");
  return guarded([&] { return emit_poly(ptutte::BiPoly::parse(text), out); });
}

ptutte_status ptutte_poly_from_json(const char* json, ptutte_poly** out) {
  PTUTTE_REQUIRE(json != nullptr && out != nullptr, "null argument");
  return guarded([&] { return emit_poly(ptutte::BiPoly::from_json(json), out); });
}

void ptutte_poly_free(ptutte_poly* poly) { delete poly; }

int ptutte_poly_equal(const ptutte_poly* a, const ptutte_poly* b) {
  return a != nullptr && b != nullptr && a->poly == b->poly ? 1 : 0;
}

ptutte_status ptutte_poly_to_text(const ptutte_poly* poly, char** out) {
  PTUTTE_REQUIRE(poly != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = copy_string(poly->poly.to_string());
    return PTUTTE_OK;
  });
}

ptutte_status ptutte_poly_to_json(const ptutte_poly* poly, char** out) {
  PTUTTE_REQUIRE(poly != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = copy_string(poly->poly.to_json());
    return PTUTTE_OK;
  });
}

ptutte_status ptutte_poly_eval(const ptutte_poly* poly, int64_t x, int64_t y, char** out) {
  PTUTTE_REQUIRE(poly != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = copy_string(poly->poly.eval(x, y).str());
    return PTUTTE_OK;
  });
}

ptutte_status ptutte_gen_uniform(uint32_t d, uint32_t n, ptutte_table** out) {
  PTUTTE_REQUIRE(out != nullptr, "null argument");
  return guarded([&] { return emit_table(ptutte::uniform_matroid(d, n).rank(), true, out); });
}

ptutte_status ptutte_gen_graphic(uint32_t vertices, const uint32_t* edges, size_t edge_count, ptutte_table** out) {
  PTUTTE_REQUIRE(out != nullptr && (edges != nullptr || edge_count == 0), "null argument");
  return guarded([&] {
    ptutte::GraphSpec g;
    g.vertices = vertices;
    for (size_t k = 0; k < edge_count; ++k) g.edges.emplace_back(edges[2 * k], edges[2 * k + 1]);
    return emit_table(ptutte::graphic_matroid(g).rank(), true, out);
  });
}

ptutte_status ptutte_gen_random(uint32_t n, uint64_t seed, int64_t bound, ptutte_table** out) {
  PTUTTE_REQUIRE(out != nullptr, "null argument");
  return guarded([&] { return emit_table(ptutte::random_submodular(n, seed, bound), false, out); });
}

ptutte_status ptutte_gen_mixture(uint32_t n, uint64_t seed, int64_t bound, ptutte_table** out) {
  PTUTTE_REQUIRE(out != nullptr, "null argument");
  return guarded([&] { return emit_table(ptutte::random_mixture(n, seed, bound), false, out); });
}

void ptutte_corpus_options_default(ptutte_corpus_options* options) {
  if (options == nullptr) return;
  const ptutte::CorpusOptions d;
  options->include_uniform = 1;
  options->uniform_max_n = static_cast<uint32_t>(*d.uniform_max_n);
  options->include_graphic = 1;
  options->graphic_max_edges = static_cast<uint32_t>(*d.graphic_max_edges);
  options->random_count = static_cast<uint32_t>(d.random_count);
  options->random_max_n = static_cast<uint32_t>(d.random_max_n);
  options->random_bound = d.random_bound;
  options->seed = d.seed;
  options->mixture_count = static_cast<uint32_t>(d.mixture_count);
  options->include_boundary = d.boundary ? 1 : 0;
  options->include_exhaustive_small = d.exhaustive_small ? 1 : 0;
}

ptutte_status ptutte_corpus_build(const ptutte_corpus_options* options, ptutte_corpus** out) {
  PTUTTE_REQUIRE(options != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    if (options->uniform_max_n > PTUTTE_MAX_EXPANSION_GROUND_SET ||
        options->random_max_n > PTUTTE_MAX_EXPANSION_GROUND_SET ||
        options->graphic_max_edges > 7) {
      return fail(PTUTTE_ERR_LIMIT, "corpus parameters exceed desk-scale limits");
    }
    ptutte::CorpusOptions o;
    o.uniform_max_n = options->include_uniform ? std::optional<std::size_t>(options->uniform_max_n) : std::nullopt;
    o.graphic_max_edges =
        options->include_graphic ? std::optional<std::size_t>(options->graphic_max_edges) : std::nullopt;
    o.random_count = options->random_count;
    o.random_max_n = options->random_max_n;
    o.random_bound = options->random_bound;
    o.seed = options->seed;
    o.mixture_count = options->mixture_count;
    o.boundary = options->include_boundary != 0;
    o.exhaustive_small = options->include_exhaustive_small != 0;

    auto corpus = std::make_unique<ptutte_corpus>();
    for (ptutte::CorpusEntry& e : ptutte::build_corpus(o)) {
      corpus->tables.push_back({std::move(e.table), e.matroid});
      corpus->names.push_back(std::move(e.name));
    }
    *out = corpus.release();
    return PTUTTE_OK;
  });
}

void ptutte_corpus_free(ptutte_corpus* corpus) { delete corpus; }

size_t ptutte_corpus_size(const ptutte_corpus* corpus) { return corpus == nullptr ? 0 : corpus->tables.size(); }

const ptutte_table* ptutte_corpus_table(const ptutte_corpus* corpus, size_t index) {
  if (corpus == nullptr || index >= corpus->tables.size()) return nullptr;
  return &corpus->tables[index];
}

const char* ptutte_corpus_name(const ptutte_corpus* corpus, size_t index) {
  if (corpus == nullptr || index >= corpus->names.size()) return nullptr;
  return corpus->names[index].c_str();
}

ptutte_status ptutte_check(const ptutte_table* table, ptutte_suite suite, ptutte_check_result* out,
                           char** witnesses) {
  PTUTTE_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const ptutte::RankTable& t = table->table;
    ptutte::require_polymatroid(t);
    ptutte::CheckReport report;
    switch (suite) {
      case PTUTTE_SUITE_MINORS: report = ptutte::check_minor_identities(t); break;
      case PTUTTE_SUITE_CLAIMS: report = ptutte::check_claims(t); break;
      case PTUTTE_SUITE_CORRESPONDENCE:
        require_expansion_size(t);
        report = ptutte::check_correspondence(ptutte::MatroidTable(t));
        break;
      case PTUTTE_SUITE_EQUIVALENCE:
        require_expansion_size(t);
        report = ptutte::check_equivalence(t);
        break;
      default: return fail(PTUTTE_ERR_OUT_OF_RANGE, "unknown suite");
    }
    out->passed = report.passed() ? 1 : 0;
    out->checks = report.checks;
    out->failed = report.failed;
    if (witnesses != nullptr) *witnesses = copy_string(nlohmann::json(report.witnesses).dump());
    return PTUTTE_OK;
  });
}

}  // extern "C"
