// ptutte command-line front end. Talks to the library only through the C API.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptutte/ptutte.h"

namespace {

using Json = nlohmann::ordered_json;

enum ExitCode { kSuccess = 0, kCheckFailed = 1, kUsage = 2 };

/// Thrown for anything that should end the run with a diagnostic.
struct CliError {
  int exit_code;
  std::string message;
};

struct TableDeleter {
  void operator()(ptutte_table* t) const { ptutte_table_free(t); }
};
struct PolyDeleter {
  void operator()(ptutte_poly* p) const { ptutte_poly_free(p); }
};
struct CorpusDeleter {
  void operator()(ptutte_corpus* c) const { ptutte_corpus_free(c); }
};
using TablePtr = std::unique_ptr<ptutte_table, TableDeleter>;
using PolyPtr = std::unique_ptr<ptutte_poly, PolyDeleter>;
using CorpusPtr = std::unique_ptr<ptutte_corpus, CorpusDeleter>;

int exit_code_for(ptutte_status s) { return s == PTUTTE_ERR_PARSE || s == PTUTTE_ERR_INVALID_ARGUMENT ? kUsage : kCheckFailed; }

void check(ptutte_status s) {
  if (s != PTUTTE_OK) throw CliError{exit_code_for(s), ptutte_last_error()};
}

std::string take_string(char* s) {
  std::string out(s);
  ptutte_string_free(s);
  return out;
}

struct GlobalOptions {
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 1;
  std::string strategy = "min-range";
  std::string order;
};

std::vector<std::uint32_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw CliError{kUsage, std::string("bad ") + what + " entry '" + item + "'"};
    }
  }
  return out;
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kUsage, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedInput {
  TablePtr table;
  Json description;
};

LoadedInput load_table(const std::string& path) {
  const std::string text = read_file(path);
  ptutte_table* raw = nullptr;
  const ptutte_status s = ptutte_table_from_json(text.c_str(), &raw);
  if (s != PTUTTE_OK) throw CliError{exit_code_for(s), path + ": " + ptutte_last_error()};
  LoadedInput out{TablePtr(raw), Json::object()};
  out.description["path"] = path;
  out.description["digest"] = fnv1a_digest(text);
  out.description["n"] = ptutte_table_size(raw);
  out.description["kind"] = ptutte_table_is_matroid_kind(raw) ? "matroid" : "polymatroid";
  return out;
}

Json poly_output(const ptutte_poly* p, bool json) {
  char* s = nullptr;
  if (json) {
    check(ptutte_poly_to_json(p, &s));
    return Json::parse(take_string(s));
  }
  check(ptutte_poly_to_text(p, &s));
  return take_string(s);
}

Json table_json(const ptutte_table* t) {
  char* s = nullptr;
  check(ptutte_table_to_json(t, &s));
  return Json::parse(take_string(s));
}

std::string mask_text(std::uint32_t m) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t e = 1; m != 0; ++e, m >>= 1) {
    if (m & 1U) {
      out += (first ? "" : ",") + std::to_string(e);
      first = false;
    }
  }
  return out + "}";
}

Json validation_output(const ptutte_validation& v) {
  Json out = Json::object();
  out["ok"] = v.ok != 0;
  if (!v.ok) {
    out["axiom"] = ptutte_axiom_name(v.axiom);
    const bool pair = v.axiom == PTUTTE_AXIOM_SUBMODULARITY || v.axiom == PTUTTE_AXIOM_MONOTONICITY ||
                      v.axiom == PTUTTE_AXIOM_RANK_SUBMODULARITY;
    out["witness"] = pair ? Json::array({mask_text(v.first), mask_text(v.second)})
                          : Json::array({mask_text(v.first)});
  }
  return out;
}

void require_valid(const ptutte_table* t) {
  ptutte_validation v{};
  check(ptutte_validate_polymatroid(t, &v));
  if (!v.ok) {
    std::string msg = std::string("input is not a polymatroid: ") + ptutte_axiom_name(v.axiom) + " violated";
    throw CliError{kCheckFailed, msg};
  }
}

// ---- rendering ------------------------------------------------------------

void render_human(std::ostream& os, const Json& value, const std::string& prefix) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      render_human(os, child, prefix.empty() ? key : prefix + "." + key);
    }
    return;
  }
  os << prefix << ": ";
  if (value.is_string()) {
    os << value.get<std::string>();
  } else {
    os << value.dump();
  }
  os << '\n';
}

void emit(const GlobalOptions& g, const Json& report) {
  if (g.json) {
    std::cout << report.dump() << '\n';
  } else {
    render_human(std::cout, report, "");
  }
}

// ---- subcommands ------------------------------------------------------------

struct Context {
  GlobalOptions global;
  Json report = Json::object();
  bool ok = true;
};

void cmd_validate(Context& ctx, const std::string& path) {
  LoadedInput in = load_table(path);
  ctx.report["input"] = in.description;
  ptutte_validation v{};
  check(ptutte_validate(in.table.get(), &v));
  ctx.report["outputs"] = validation_output(v);
  ctx.ok = v.ok != 0;
}

void cmd_tutte(Context& ctx, const std::string& path, const std::string& method) {
  LoadedInput in = load_table(path);
  ctx.report["input"] = in.description;
  require_valid(in.table.get());
  const ptutte_table* t = in.table.get();

  Json outputs = Json::object();
  PolyPtr expansion;
  PolyPtr recursion;
  if (method == "expansion" || method == "both") {
    const std::vector<std::uint32_t> order = parse_list(ctx.global.order, "order");
    ptutte_poly* p = nullptr;
    check(ptutte_tutte_expansion(t, order.empty() ? nullptr : order.data(), order.size(), &p));
    expansion.reset(p);
    outputs["expansion"] = poly_output(p, ctx.global.json);
  }
  if (method == "recursion" || method == "both") {
    ptutte_strategy strategy{};
    check(ptutte_strategy_from_name(ctx.global.strategy.c_str(), &strategy));
    ptutte_poly* p = nullptr;
    check(ptutte_tutte_recursive(t, strategy, &p));
    recursion.reset(p);
    outputs["strategy"] = ctx.global.strategy;
    outputs["recursion"] = poly_output(p, ctx.global.json);
  }
  if (expansion && recursion) {
    const bool equal = ptutte_poly_equal(expansion.get(), recursion.get()) != 0;
    outputs["verdict"] = equal ? "equal" : "different";
    ctx.ok = equal;
  }
  ctx.report["outputs"] = outputs;
}

void cmd_bases(Context& ctx, const std::string& path) {
  LoadedInput in = load_table(path);
  ctx.report["input"] = in.description;
  require_valid(in.table.get());
  char* s = nullptr;
  check(ptutte_bases_json(in.table.get(), &s));
  const Json bases = Json::parse(take_string(s));
  ctx.report["outputs"] = {{"count", bases.size()}, {"bases", bases}};
}

void cmd_permute(Context& ctx, const std::string& path) {
  LoadedInput in = load_table(path);
  ctx.report["input"] = in.description;
  const std::vector<std::uint32_t> sigma = parse_list(ctx.global.order, "order");
  ptutte_table* out = nullptr;
  check(ptutte_permute(in.table.get(), sigma.empty() ? nullptr : sigma.data(), sigma.size(), &out));
  TablePtr permuted(out);
  ctx.report["outputs"] = {{"sigma", sigma}, {"table", table_json(permuted.get())}};
}

struct GenOptions {
  std::string family;
  std::uint32_t d = 0;
  std::uint32_t n = 0;
  std::int64_t bound = 5;
  std::uint32_t vertices = 0;
  std::string edges;
  std::string out;
};

void cmd_gen(Context& ctx, const GenOptions& o) {
  ptutte_table* raw = nullptr;
  Json params = Json::object();
  if (o.family == "uniform") {
    check(ptutte_gen_uniform(o.d, o.n, &raw));
    params = {{"d", o.d}, {"n", o.n}};
  } else if (o.family == "graphic") {
    std::vector<std::uint32_t> endpoints;
    std::uint32_t max_vertex = 0;
    std::stringstream ss(o.edges);
    std::string edge;
    while (std::getline(ss, edge, ',')) {
      const auto dash = edge.find('-');
      if (dash == std::string::npos) throw CliError{kUsage, "edge '" + edge + "' is not of the form u-v"};
      const auto pair = parse_list(edge.substr(0, dash) + "," + edge.substr(dash + 1), "edge");
      if (pair.size() != 2) throw CliError{kUsage, "edge '" + edge + "' is not of the form u-v"};
      endpoints.insert(endpoints.end(), pair.begin(), pair.end());
      max_vertex = std::max({max_vertex, pair[0], pair[1]});
    }
    const std::uint32_t vertices = o.vertices != 0 ? o.vertices : max_vertex;
    check(ptutte_gen_graphic(vertices, endpoints.empty() ? nullptr : endpoints.data(), endpoints.size() / 2, &raw));
    params = {{"vertices", vertices}, {"edges", o.edges}};
  } else if (o.family == "random" || o.family == "mixture") {
    check(o.family == "random" ? ptutte_gen_random(o.n, ctx.global.seed, o.bound, &raw)
                               : ptutte_gen_mixture(o.n, ctx.global.seed, o.bound, &raw));
    params = {{"n", o.n}, {"seed", ctx.global.seed}, {"bound", o.bound}};
  } else {
    throw CliError{kUsage, "unknown family '" + o.family + "'"};
  }
  TablePtr table(raw);

  char* s = nullptr;
  check(ptutte_table_to_json(table.get(), &s));
  const std::string text = take_string(s);
  if (!o.out.empty()) {
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    if (!file) throw CliError{kCheckFailed, "cannot write '" + o.out + "'"};
    file << text << '\n';
  }
  ctx.report["outputs"] = {{"family", o.family}, {"params", params}, {"table", Json::parse(text)}};
  if (!o.out.empty()) ctx.report["outputs"]["path"] = o.out;
}

struct CheckOptions {
  std::string path;
  std::string suite = "all";
  bool corpus = false;
  std::uint32_t uniform_max_n = 6;
  std::uint32_t graphic_max_edges = 5;
  std::uint32_t random_count = 200;
  std::uint32_t random_max_n = 5;
  std::uint32_t mixture_count = 0;
  std::int64_t bound = 5;
  bool boundary = true;
};

std::vector<ptutte_suite> suites_for(const std::string& name) {
  if (name == "minors") return {PTUTTE_SUITE_MINORS};
  if (name == "claims") return {PTUTTE_SUITE_CLAIMS};
  if (name == "correspondence") return {PTUTTE_SUITE_CORRESPONDENCE};
  if (name == "equivalence") return {PTUTTE_SUITE_EQUIVALENCE};
  if (name == "all") {
    return {PTUTTE_SUITE_MINORS, PTUTTE_SUITE_CLAIMS, PTUTTE_SUITE_CORRESPONDENCE, PTUTTE_SUITE_EQUIVALENCE};
  }
  throw CliError{kUsage, "unknown suite '" + name + "'"};
}

const char* suite_name(ptutte_suite s) {
  switch (s) {
    case PTUTTE_SUITE_MINORS: return "minors";
    case PTUTTE_SUITE_CLAIMS: return "claims";
    case PTUTTE_SUITE_CORRESPONDENCE: return "correspondence";
    case PTUTTE_SUITE_EQUIVALENCE: return "equivalence";
  }
  return "unknown";
}

void cmd_check(Context& ctx, const CheckOptions& o) {
  const std::vector<ptutte_suite> suites = suites_for(o.suite);
  const bool explicit_correspondence = o.suite == "correspondence";

  struct Item {
    std::string name;
    const ptutte_table* table;
  };
  std::vector<Item> items;
  LoadedInput in;
  CorpusPtr corpus;
  if (!o.path.empty()) {
    in = load_table(o.path);
    ctx.report["input"] = in.description;
    require_valid(in.table.get());
    items.push_back({o.path, in.table.get()});
  }
  if (o.corpus) {
    ptutte_corpus_options opts{};
    ptutte_corpus_options_default(&opts);
    opts.uniform_max_n = o.uniform_max_n;
    opts.graphic_max_edges = o.graphic_max_edges;
    opts.random_count = o.random_count;
    opts.random_max_n = o.random_max_n;
    opts.random_bound = o.bound;
    opts.mixture_count = o.mixture_count;
    opts.seed = ctx.global.seed;
    opts.include_boundary = o.boundary ? 1 : 0;
    ptutte_corpus* raw = nullptr;
    check(ptutte_corpus_build(&opts, &raw));
    corpus.reset(raw);
    for (std::size_t k = 0; k < ptutte_corpus_size(raw); ++k) {
      items.push_back({ptutte_corpus_name(raw, k), ptutte_corpus_table(raw, k)});
    }
    ctx.report["corpus"] = {{"tables", ptutte_corpus_size(raw)}, {"seed", ctx.global.seed}};
  }
  if (items.empty()) throw CliError{kUsage, "check needs a table path or --corpus"};

  Json results = Json::object();
  Json failures = Json::array();
  for (ptutte_suite suite : suites) {
    std::uint64_t checks = 0;
    std::uint64_t failed = 0;
    std::uint64_t tables = 0;
    for (const Item& item : items) {
      if (suite == PTUTTE_SUITE_CORRESPONDENCE) {
        ptutte_validation v{};
        check(ptutte_validate_matroid(item.table, &v));
        if (!v.ok) {
          if (explicit_correspondence && !o.corpus) {
            throw CliError{kCheckFailed, "correspondence suite requires a matroid rank table"};
          }
          continue;
        }
      }
      ptutte_check_result r{};
      char* witnesses = nullptr;
      check(ptutte_check(item.table, suite, &r, &witnesses));
      const Json w = Json::parse(take_string(witnesses));
      ++tables;
      checks += r.checks;
      failed += r.failed;
      for (const auto& text : w) {
        if (failures.size() < 20) failures.push_back({{"suite", suite_name(suite)}, {"table", item.name}, {"witness", text}});
      }
    }
    results[suite_name(suite)] = {{"tables", tables}, {"checks", checks}, {"failed", failed}, {"passed", failed == 0}};
    ctx.ok = ctx.ok && failed == 0;
  }
  ctx.report["outputs"] = {{"suites", results}};
  if (!failures.empty()) ctx.report["outputs"]["failures"] = failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ptutte: polymatroid Tutte polynomials by bases expansion and by recursion"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  GlobalOptions& g = ctx.global;
  app.add_flag("--json", g.json, "Machine-readable JSON report; polynomials as [i, j, c] triples");
  app.add_flag("--timing", g.timing, "Include wall-clock time in the report");
  app.add_option("--seed", g.seed, "Seed for random generation");
  app.add_option("--strategy", g.strategy, "Pivot strategy for the recursion")
      ->check(CLI::IsMember({"last", "first", "min-range", "max-range"}));
  app.add_option("--order", g.order, "Comma-separated permutation of 1..n");

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check the rank-function axioms of a table");
  validate->add_option("path", path, "Rank table JSON")->required();

  std::string method = "both";
  auto* tutte = app.add_subcommand("tutte", "Compute the polymatroid Tutte polynomial");
  tutte->add_option("path", path, "Rank table JSON")->required();
  tutte->add_option("--method", method, "expansion, recursion or both")
      ->check(CLI::IsMember({"expansion", "recursion", "both"}));

  CheckOptions check_opts;
  auto* check_cmd = app.add_subcommand("check", "Run identity suites on a table or a generated corpus");
  check_cmd->add_option("path", check_opts.path, "Rank table JSON");
  check_cmd->add_option("--suite", check_opts.suite, "minors, claims, correspondence, equivalence or all")
      ->check(CLI::IsMember({"minors", "claims", "correspondence", "equivalence", "all"}));
  check_cmd->add_flag("--corpus", check_opts.corpus, "Also run over the generated corpus");
  check_cmd->add_option("--uniform-max-n", check_opts.uniform_max_n, "Largest n for U_{d,n}");
  check_cmd->add_option("--graphic-max-edges", check_opts.graphic_max_edges, "Largest graph for graphic matroids");
  check_cmd->add_option("--random-count", check_opts.random_count, "Number of random tables");
  check_cmd->add_option("--random-max-n", check_opts.random_max_n, "Largest n for random tables");
  check_cmd->add_option("--mixture-count", check_opts.mixture_count, "Number of random mixture tables");
  check_cmd->add_option("--bound", check_opts.bound, "Value bound for random tables");

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate a rank table");
  gen->add_option("--family", gen_opts.family, "uniform, graphic, random or mixture")
      ->required()
      ->check(CLI::IsMember({"uniform", "graphic", "random", "mixture"}));
  gen->add_option("-d,--d", gen_opts.d, "Rank of the uniform matroid");
  gen->add_option("-n,--n", gen_opts.n, "Ground-set size");
  gen->add_option("--bound", gen_opts.bound, "Value bound for random tables");
  gen->add_option("--vertices", gen_opts.vertices, "Vertex count (default: largest endpoint)");
  gen->add_option("--edges", gen_opts.edges, "Edge list such as 1-2,2-3,3-1");
  gen->add_option("-o,--out", gen_opts.out, "Write the table to this file");

  auto* bases = app.add_subcommand("bases", "List the bases (integer points) of a polymatroid");
  bases->add_option("path", path, "Rank table JSON")->required();

  auto* permute = app.add_subcommand("permute", "Relabel the ground set by --order");
  permute->add_option("path", path, "Rank table JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kSuccess : kUsage;
  }

  std::string echo = "ptutte";
  for (int k = 1; k < argc; ++k) echo += std::string(" ") + argv[k];

  const auto started = std::chrono::steady_clock::now();
  try {
    ctx.report["command"] = echo;
    if (*validate) {
      cmd_validate(ctx, path);
    } else if (*tutte) {
      cmd_tutte(ctx, path, method);
    } else if (*check_cmd) {
      cmd_check(ctx, check_opts);
    } else if (*gen) {
      cmd_gen(ctx, gen_opts);
    } else if (*bases) {
      cmd_bases(ctx, path);
    } else if (*permute) {
      cmd_permute(ctx, path);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  }

  ctx.report["status"] = ctx.ok ? "ok" : "failed";
  if (g.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    ctx.report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  emit(g, ctx.report);
  return ctx.ok ? kSuccess : kCheckFailed;
}
