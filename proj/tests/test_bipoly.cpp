#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "ptutte/error.hpp"

using ptutte::BigInt;
using ptutte::BiPoly;

TEST_CASE("addition") {
  const BiPoly x = BiPoly::x(), y = BiPoly::y(), one = BiPoly::constant(1);
  CHECK(x + y + BiPoly{} == x + y);
  CHECK((x + y - one) + one == x + y);
  CHECK((x * y) + (x * y) == BiPoly::monomial(2, 1, 1));
  CHECK((x - x).is_zero());
  CHECK((x - x).terms().empty());
}

TEST_CASE("multiplication against the schoolbook oracle") {
  const BiPoly s = BiPoly::x() + BiPoly::y();
  CHECK(s * BiPoly::constant(1) == s);
  CHECK(BiPoly::x() * BiPoly::y() == BiPoly::monomial(1, 1, 1));
  const BiPoly t = ptutte::x_plus_y_minus_one();
  const BiPoly expected = oracle::poly_of(oracle::multiply(oracle::dense_of(s), oracle::dense_of(t)));
  CHECK(s * t == expected);
  CHECK((s * t).to_string() == "x^2 + 2*x*y + y^2 - x - y");
}

TEST_CASE("pow") {
  const BiPoly t = ptutte::x_plus_y_minus_one();
  CHECK(ptutte::pow(t, 0) == BiPoly::constant(1));
  CHECK(ptutte::pow(t, 1) == t);
  CHECK(ptutte::pow(t, 2) == poly("x^2 + 2*x*y + y^2 - 2*x - 2*y + 1"));
  auto d = oracle::dense_of(t);
  auto acc = d;
  for (std::uint32_t k = 2; k <= 8; ++k) {
    acc = oracle::multiply(acc, d);
    CHECK(ptutte::pow(t, k) == oracle::poly_of(acc));
  }
}

TEST_CASE("eval") {
  CHECK((BiPoly::x() + BiPoly::y()).eval(1, 1) == 2);
  CHECK(BiPoly::constant(1).eval(7, -3) == 1);
  CHECK(poly("x^2 + 2*x*y + y^2 - x - y").eval(2, 2) == 12);
  CHECK(BiPoly{}.eval(5, 5) == 0);
}

TEST_CASE("coefficients beyond 64 bits") {
  const BiPoly big = ptutte::pow(BiPoly::constant(2) * BiPoly::x() + BiPoly::constant(3), 80);
  const BigInt top = big.coefficient(80, 0);
  BigInt expected = 1;
  for (int i = 0; i < 80; ++i) expected *= 2;
  CHECK(top == expected);
  CHECK(BiPoly::parse(big.to_string()) == big);
  CHECK(BiPoly::from_json(big.to_json()) == big);
}

TEST_CASE("text format") {
  CHECK(BiPoly{}.to_string() == "0");
  CHECK(BiPoly::constant(-3).to_string() == "-3");
  CHECK(poly("y^3 - 2*x*y^2 + 5").to_string() == "-2*x*y^2 + y^3 + 5");
  CHECK(poly("-x").to_string() == "-x");
  CHECK(poly("  x*y  +  x *y ").to_string() == "2*x*y");
  CHECK(poly("x^2 + 2*x*y + y^2 - x - y").total_degree() == 2);
}

TEST_CASE("json format") {
  const BiPoly p = poly("x^2 + 2*x*y + y^2 - x - y");
  CHECK(p.to_json() == "[[0,1,-1],[0,2,1],[1,0,-1],[1,1,2],[2,0,1]]");
  CHECK(BiPoly::from_json(p.to_json()) == p);
  CHECK(BiPoly{}.to_json() == "[]");
  CHECK(BiPoly::from_json("[[1,0,2],[1,0,-2]]").is_zero());
}

TEST_CASE("malformed polynomial input") {
  for (const char* bad : {"", "x^", "2**x", "x + + y", "z", "x^-1", "3 x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(BiPoly::parse(bad), ptutte::Error);
  }
  for (const char* bad : {"{", "[[1,2]]", "[[1,2,\"q\"]]", "[[-1,0,1]]", "7"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(BiPoly::from_json(bad), ptutte::Error);
  }
}

namespace {

BiPoly random_poly(oracle::SplitMix& rng) {
  BiPoly p;
  const int terms = static_cast<int>(rng.range(0, 5));
  for (int k = 0; k < terms; ++k)
    p += BiPoly::monomial(rng.range(-4, 4), static_cast<std::uint32_t>(rng.range(0, 3)),
                          static_cast<std::uint32_t>(rng.range(0, 3)));
  return p;
}

}  // namespace

TEST_CASE("ring laws and evaluation homomorphism on random polynomials") {
  oracle::SplitMix rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const BiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == BiPoly{});
    CHECK(-(-a) == a);
    CHECK(a * b == oracle::poly_of(oracle::multiply(oracle::dense_of(a), oracle::dense_of(b))));
    const long long x0 = rng.range(-3, 3), y0 = rng.range(-3, 3);
    CHECK((a * b).eval(x0, y0) == a.eval(x0, y0) * b.eval(x0, y0));
    CHECK((a + b).eval(x0, y0) == a.eval(x0, y0) + b.eval(x0, y0));
    CHECK(BiPoly::parse(a.to_string()) == a);
    CHECK(BiPoly::from_json(a.to_json()) == a);
    for (const auto& [e, coef] : a.terms()) CHECK(coef != 0);
  }
}
