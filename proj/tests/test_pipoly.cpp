#include <doctest.h>

#include <random>

#include "wpvol/pi_poly.hpp"

using namespace wpvol;

namespace {

PiPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 4), num(-9, 9), den(1, 7);
  PiPoly p;
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t)
    p += PiPoly::monomial(static_cast<unsigned>(deg(rng)),
                          Rational(num(rng), den(rng)));
  return p;
}

}  // namespace

TEST_CASE("basic arithmetic and normalization") {
  PiPoly a = PiPoly::monomial(1, Rational(1, 6));  // pi^2/6
  PiPoly b = PiPoly::monomial(1, Rational(-1, 6));
  CHECK((a + b).is_zero());
  CHECK(a - a == PiPoly());
  PiPoly c = a * PiPoly::monomial(2, Rational(3));  // pi^6/2
  CHECK(c.degree() == 3);
  CHECK(c.coefficient(3) == Rational(1, 2));
  CHECK((a * Rational(0)).is_zero());
}

TEST_CASE("ring laws on random triples") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    PiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("evaluation encloses the truth") {
  PiPoly p = PiPoly::monomial(1, Rational(1));  // pi^2
  Interval v = p.eval(128);
  CHECK(v.lo_d() <= 9.869604401089358);
  CHECK(v.hi_d() >= 9.869604401089358);
  CHECK(v.width() < 1e-30);
  // nested precision: coarser enclosures contain finer ones
  Interval w = p.eval(64);
  CHECK(w.lo_d() <= v.lo_d());
  CHECK(w.hi_d() >= v.hi_d());
}

TEST_CASE("compare decides orderings") {
  PiPoly half(Rational(1, 2));
  CHECK(compare(half, half) == Order::equal);
  CHECK(compare(PiPoly::monomial(1, Rational(1)), PiPoly(Rational(9))) ==
        Order::greater);
  CHECK(compare(PiPoly::monomial(1, Rational(2)), PiPoly(Rational(12))) ==
        Order::greater);
  CHECK(compare(PiPoly(Rational(10)), PiPoly::monomial(1, Rational(1))) ==
        Order::greater);
}

TEST_CASE("compare is antisymmetric and transitive on decided triples") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    PiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    Order ab = compare(a, b), ba = compare(b, a);
    if (ab == Order::less) CHECK(ba == Order::greater);
    if (ab == Order::greater) CHECK(ba == Order::less);
    if (ab == Order::equal) CHECK(ba == Order::equal);
    if (compare(a, b) != Order::greater && compare(b, c) != Order::greater)
      CHECK(compare(a, c) != Order::greater);
  }
}

TEST_CASE("cache string round-trip") {
  PiPoly p = PiPoly::monomial(0, Rational(1, 2)) + PiPoly::monomial(2, Rational(7, 8));
  CHECK(p.cache_str() == "0:1/2,2:7/8");
  CHECK(PiPoly::parse_cache(p.cache_str()) == p);
  CHECK_THROWS(PiPoly::parse_cache("0:1/2,0:1/3"));
  CHECK_THROWS(PiPoly::parse_cache("0:2/4"));
  CHECK_THROWS(PiPoly::parse_cache("0:1/0"));
  CHECK_THROWS(PiPoly::parse_cache(""));
}

TEST_CASE("pretty printing") {
  CHECK(PiPoly::monomial(1, Rational(1, 6)).pretty() == "pi^2/6");
  CHECK(PiPoly::monomial(1, Rational(2)).pretty() == "2*pi^2");
  PiPoly p = PiPoly::monomial(1, Rational(2)) + PiPoly(Rational(2));
  CHECK(p.pretty() == "2*pi^2 + 2");
  CHECK(PiPoly().pretty() == "0");
  CHECK(PiPoly::monomial(2, Rational(-1, 4)).pretty() == "-pi^4/4");
}
