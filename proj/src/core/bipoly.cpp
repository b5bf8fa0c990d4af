#include "ptutte/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ptutte/error.hpp"

namespace ptutte {

BiPoly BiPoly::constant(const BigInt& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const BigInt& c, std::uint32_t i, std::uint32_t j) {
  BiPoly p;
  p.accumulate({i, j}, c);
  return p;
}

BigInt BiPoly::coefficient(std::uint32_t i, std::uint32_t j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t BiPoly::total_degree() const {
  std::uint32_t deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.x + e.y);
  return deg;
}

void BiPoly::accumulate(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) accumulate(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) accumulate(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  *this = *this * other;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  BiPoly out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.accumulate({ea.x + eb.x, ea.y + eb.y}, ca * cb);
    }
  }
  return out;
}

BiPoly BiPoly::scaled(const BigInt& factor) const {
  BiPoly out;
  if (factor == 0) return out;
  out = *this;
  for (auto& [e, c] : out.terms_) c *= factor;
  return out;
}

BigInt BiPoly::eval(const BigInt& x0, const BigInt& y0) const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) {
    sum += c * boost::multiprecision::pow(x0, e.x) * boost::multiprecision::pow(y0, e.y);
  }
  return sum;
}

namespace {

void append_monomial(std::ostream& os, const Exponent& e) {
  bool first = true;
  auto factor = [&](char var, std::uint32_t k) {
    if (k == 0) return;
    if (!first) os << '*';
    os << var;
    if (k > 1) os << '^' << k;
    first = false;
  };
  factor('x', e.x);
  factor('y', e.y);
}

}  // namespace

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, BigInt>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const auto da = a.first.x + a.first.y;
    const auto db = b.first.x + b.first.y;
    if (da != db) return da > db;
    return a.first.x > b.first.x;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const BigInt mag = negative ? BigInt(-c) : c;
    const bool unit_monomial = e.x == 0 && e.y == 0;
    if (unit_monomial) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      append_monomial(os, e);
    }
  }
  return os.str();
}

std::string BiPoly::to_json() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ',';
    first = false;
    os << '[' << e.x << ',' << e.y << ',';
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      os << c;
    } else {
      os << '"' << c << '"';
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view text) : text_(text) {}

  BiPoly parse() {
    BiPoly out;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    for (;;) {
      BiPoly term = parse_term();
      out += negative ? -term : term;
      skip_ws();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      skip_ws();
    }
    return out;
  }

 private:
  BiPoly parse_term() {
    BigInt coeff = 1;
    Exponent e;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_integer();
      } else if (c == 'x' || c == 'y') {
        get();
        std::uint32_t k = 1;
        skip_ws();
        if (peek() == '^') {
          get();
          skip_ws();
          const BigInt parsed = parse_integer();
          if (parsed > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
          k = static_cast<std::uint32_t>(parsed);
        }
        (c == 'x' ? e.x : e.y) += k;
      } else {
        fail("expected coefficient, 'x' or 'y'");
      }
      skip_ws();
      if (peek() != '*') break;
      get();
    }
    return BiPoly::monomial(coeff, e.x, e.y);
  }

  BigInt parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }

  [[noreturn]] void fail(const char* what) const {
    throw Error(ErrorCode::MalformedInput,
                "polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint32_t json_exponent(const nlohmann::json& v) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw Error(ErrorCode::MalformedInput, "polynomial exponent must be a nonnegative integer");
  }
  const auto k = v.get<std::uint64_t>();
  if (k > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::MalformedInput, "polynomial exponent too large");
  }
  return static_cast<std::uint32_t>(k);
}

BigInt json_coefficient(const nlohmann::json& v) {
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    const bool ok = !s.empty() &&
                    std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
                    s != "-";
    if (!ok) throw Error(ErrorCode::MalformedInput, "bad coefficient string '" + s + "'");
    return BigInt(s);
  }
  throw Error(ErrorCode::MalformedInput, "polynomial coefficient must be an integer");
}

}  // namespace

BiPoly BiPoly::parse(std::string_view text) { return TextParser(text).parse(); }

BiPoly BiPoly::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput,
                "polynomial JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::MalformedInput, "polynomial JSON must be an array");
  BiPoly out;
  for (const auto& triple : doc) {
    if (!triple.is_array() || triple.size() != 3) {
      throw Error(ErrorCode::MalformedInput, "polynomial term must be an [i, j, c] triple");
    }
    out.accumulate({json_exponent(triple[0]), json_exponent(triple[1])}, json_coefficient(triple[2]));
  }
  return out;
}

BiPoly pow(const BiPoly& base, std::uint32_t k) {
  BiPoly result = BiPoly::constant(1);
  BiPoly square = base;
  while (k > 0) {
    if (k & 1U) result *= square;
    k >>= 1U;
    if (k > 0) square *= square;
  }
  return result;
}

BiPoly x_plus_y_minus_one() { return BiPoly::x() + BiPoly::y() - BiPoly::constant(1); }

}  // namespace ptutte
