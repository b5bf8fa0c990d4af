#include "ptutte/table_io.hpp"

#include <sstream>

#include <json.hpp>

#include "ptutte/error.hpp"

namespace ptutte {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

}  // namespace

LoadedTable parse_table_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) malformed("rank table must be a JSON object");

  LoadedTable out;
  if (auto kind = doc.find("kind"); kind != doc.end()) {
    if (!kind->is_string()) malformed("\"kind\" must be a string");
    const auto& k = kind->get_ref<const std::string&>();
    if (k == "matroid") {
      out.matroid = true;
    } else if (k != "polymatroid") {
      malformed("unknown kind \"" + k + "\" (expected \"matroid\" or \"polymatroid\")");
    }
  }

  auto n_it = doc.find("n");
  if (n_it == doc.end()) malformed("missing field \"n\"");
  if (!n_it->is_number_integer() || n_it->get<std::int64_t>() < 0) malformed("\"n\" must be a nonnegative integer");
  const auto n = n_it->get<std::uint64_t>();
  if (n > kMaxGroundSet) {
    throw Error(ErrorCode::LimitExceeded, "n=" + std::to_string(n) + " exceeds the limit of " +
                                              std::to_string(kMaxGroundSet));
  }

  auto f_it = doc.find("f");
  if (f_it == doc.end()) malformed("missing field \"f\"");
  if (!f_it->is_array()) malformed("\"f\" must be an array");
  std::vector<Rank> values;
  values.reserve(f_it->size());
  for (std::size_t k = 0; k < f_it->size(); ++k) {
    const auto& v = (*f_it)[k];
    if (!v.is_number_integer()) malformed("\"f\"[" + std::to_string(k) + "] is not an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      malformed("\"f\"[" + std::to_string(k) + "] out of range");
    }
    values.push_back(v.get<Rank>());
  }
  out.table = RankTable(static_cast<std::size_t>(n), std::move(values));
  return out;
}

std::string table_to_json(const RankTable& tbl, bool matroid) {
  std::ostringstream os;
  os << '{';
  if (matroid) os << "\"kind\": \"matroid\", ";
  os << "\"n\": " << tbl.size() << ", \"f\": [";
  for (std::size_t k = 0; k < tbl.values().size(); ++k) os << (k ? ", " : "") << tbl.values()[k];
  os << "]}";
  return os.str();
}

std::string bases_to_json(const std::vector<BasisVector>& bases) {
  std::ostringstream os;
  os << '[';
  for (std::size_t b = 0; b < bases.size(); ++b) {
    os << (b ? "," : "") << '[';
    for (std::size_t k = 0; k < bases[b].size(); ++k) os << (k ? "," : "") << bases[b][k];
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace ptutte
