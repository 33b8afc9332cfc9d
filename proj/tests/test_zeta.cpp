#include <doctest.h>

#include "wpvol/zeta.hpp"

using namespace wpvol;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (unsigned m = 3; m <= 61; m += 2) CHECK(bernoulli(m) == Rational(0));
}

TEST_CASE("even zeta values as exact monomials") {
  CHECK(zeta_even(1) == PiPoly::monomial(1, Rational(1, 6)));
  CHECK(zeta_even(2) == PiPoly::monomial(2, Rational(1, 90)));
  CHECK(zeta_even(3) == PiPoly::monomial(3, Rational(1, 945)));
  CHECK(zeta_even(4) == PiPoly::monomial(4, Rational(1, 9450)));
  for (unsigned i = 1; i <= 12; ++i) CHECK(zeta_even(i).degree() == i);
  CHECK_THROWS_AS(zeta_even(0), std::invalid_argument);
}

TEST_CASE("zeta(2) against partial sums with integral tail bracket") {
  // sum_{k<=K} 1/k^2 + (1/(K+1), 1/K) encloses zeta(2)
  const unsigned K = 2000;
  Rational partial(0);
  for (unsigned k = 1; k <= K; ++k)
    partial += Rational(1) / (Rational(k) * Rational(k));
  Interval z = zeta_even(1).eval(192);
  Interval lo = Interval::exact(partial + Rational(1, K + 1), 192);
  Interval hi = Interval::exact(partial + Rational(1, K), 192);
  CHECK(lo.certainly_less(z));
  CHECK(z.certainly_less(hi));
}

TEST_CASE("zeta(4) numeric sanity") {
  CHECK(zeta_even(2).eval(128).mid() == doctest::Approx(1.082323233711138).epsilon(1e-12));
}

TEST_CASE("u weights") {
  CHECK(u_weight(0) == PiPoly(Rational(1, 2)));
  CHECK(u_weight(1) == PiPoly::monomial(1, Rational(1, 12)));
  CHECK(u_weight(2) == PiPoly::monomial(2, Rational(7, 720)));
  CHECK(u_weight(3) == PiPoly::monomial(3, Rational(31, 30240)));
  for (unsigned i = 1; i <= 10; ++i) CHECK(u_weight(i).degree() == i);
}

TEST_CASE("u sequence increases to 1 and speed statistic stays below 3/4") {
  for (unsigned i = 0; i <= 60; ++i) {
    CHECK(compare(u_weight(i), u_weight(i + 1)) == Order::less);
    CHECK(compare(u_weight(i), PiPoly(Rational(1))) == Order::less);
  }
  // 4^i (u_{i+1} - u_i) < 3/4 for all i; the sup 3/4 is approached from
  // below, so no finite prefix maximum bounds the sequence
  for (unsigned i = 0; i <= 30; ++i) {
    PiPoly e = (u_weight(i + 1) - u_weight(i)) * Rational(4).pow(i);
    CHECK(compare(e, PiPoly(Rational(3, 4))) == Order::less);
  }
  PiPoly e5 = (u_weight(6) - u_weight(5)) * Rational(4).pow(5);
  PiPoly e6 = (u_weight(7) - u_weight(6)) * Rational(4).pow(6);
  CHECK(compare(e5, e6) == Order::less);  // still increasing past i = 5
}

TEST_CASE("u_num encloses") {
  Interval u1 = u_num(1, 128);
  CHECK(u1.mid() == doctest::Approx(0.8224670334241132).epsilon(1e-14));
  CHECK(u1.width() < 1e-30);
}
