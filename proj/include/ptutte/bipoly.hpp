#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ptutte {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent pair (i, j) of a monomial x^i y^j. Ordered lexicographically.
struct Exponent {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse bivariate polynomial over the integers.
///
/// Stored as a map from exponent pair to coefficient; zero coefficients are
/// never stored, so structural equality of the map is polynomial equality.
/// The zero polynomial is the empty map.
class BiPoly {
 public:
  using TermMap = std::map<Exponent, BigInt>;

  BiPoly() = default;

  static BiPoly constant(const BigInt& c);
  static BiPoly monomial(const BigInt& c, std::uint32_t i, std::uint32_t j);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(std::uint32_t i, std::uint32_t j) const;
  /// Largest i + j over stored terms; 0 for the zero polynomial.
  std::uint32_t total_degree() const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  BiPoly operator-() const;

  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Scales every coefficient; scaling by zero yields the zero polynomial.
  BiPoly scaled(const BigInt& factor) const;

  BigInt eval(const BigInt& x0, const BigInt& y0) const;

  /// Human-readable form, e.g. "x^2 + 2*x*y + y^2 - x - y". Terms are listed
  /// by descending total degree, ties broken by descending x exponent.
  std::string to_string() const;
  /// JSON list of [i, j, c] triples, lexicographic by (i, j) ascending.
  /// Coefficients outside the int64 range are emitted as decimal strings.
  std::string to_json() const;

  /// Inverse of to_string(). Accepts any term order and repeated monomials.
  /// Throws Error(MalformedInput) with the offending offset.
  static BiPoly parse(std::string_view text);
  /// Inverse of to_json().
  static BiPoly from_json(std::string_view text);

 private:
  void accumulate(const Exponent& e, const BigInt& c);

  TermMap terms_;
};

BiPoly pow(const BiPoly& base, std::uint32_t k);

/// The recurring factor x + y - 1.
BiPoly x_plus_y_minus_one();

}  // namespace ptutte
