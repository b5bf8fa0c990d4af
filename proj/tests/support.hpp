#pragma once

#include <initializer_list>

#include "doctest.h"
#include <vector>

#include "ptutte/bipoly.hpp"
#include "ptutte/ranks.hpp"

inline ptutte::RankTable table(std::size_t n, std::initializer_list<ptutte::Rank> values) {
  return ptutte::RankTable(n, std::vector<ptutte::Rank>(values));
}

inline ptutte::BiPoly poly(const char* text) { return ptutte::BiPoly::parse(text); }

inline std::vector<ptutte::Rank> vec(std::initializer_list<ptutte::Rank> v) { return v; }

namespace doctest {
template <>
struct StringMaker<ptutte::BiPoly> {
  static String convert(const ptutte::BiPoly& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
