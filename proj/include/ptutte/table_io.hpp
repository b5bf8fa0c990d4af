#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ptutte/lattice.hpp"
#include "ptutte/ranks.hpp"

namespace ptutte {

struct LoadedTable {
  RankTable table;
  /// Set when the document carries "kind": "matroid".
  bool matroid = false;
};

/// Parses {"n": <int>, "f": [<2^n ints>]} with an optional "kind" of
/// "matroid" or "polymatroid". Syntax errors name the byte offset; all
/// failures throw Error(MalformedInput) (or LimitExceeded for n > 16).
LoadedTable parse_table_json(std::string_view text);

/// Inverse of parse_table_json: {"kind": ..., "n": .., "f": [...]} with
/// "kind" emitted only for matroids. Stable formatting.
std::string table_to_json(const RankTable& tbl, bool matroid = false);

/// JSON array of integer arrays.
std::string bases_to_json(const std::vector<BasisVector>& bases);

}  // namespace ptutte
