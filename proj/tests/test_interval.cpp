#include <doctest.h>

#include <cmath>

#include "wpvol/interval.hpp"

using namespace wpvol;

TEST_CASE("pi enclosure is tight and correct") {
  const double pi_dbl = 3.141592653589793;  // nearest double, just below pi
  for (mpfr_prec_t prec : {64, 128, 1024}) {
    Interval pi = Interval::pi(prec);
    CHECK(pi.lo_d() <= pi_dbl);
    CHECK(pi.hi_d() >= pi_dbl);
    CHECK(pi.width() < std::ldexp(1.0, 1 - static_cast<int>(prec)));
  }
}

TEST_CASE("arithmetic keeps enclosures") {
  Interval a = Interval::exact(Rational(1, 3), 96);
  Interval b = Interval::exact(Rational(-2, 7), 96);
  Interval s = a + b;
  CHECK(s.lo_d() <= 1.0 / 3 - 2.0 / 7);
  CHECK(s.hi_d() >= 1.0 / 3 - 2.0 / 7);
  Interval p = a * b;
  CHECK(p.lo_d() <= -2.0 / 21);
  CHECK(p.hi_d() >= -2.0 / 21);
  Interval q = a / b;
  CHECK(q.lo_d() <= -7.0 / 6);
  CHECK(q.hi_d() >= -7.0 / 6);
  CHECK_THROWS_AS(a / (b + Interval::exact(Rational(2, 7), 96)), std::domain_error);
}

TEST_CASE("functions") {
  Interval x = Interval::exact(1, 128);
  CHECK(x.sinh().mid() == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));
  CHECK(x.cosh().mid() == doctest::Approx(std::cosh(1.0)).epsilon(1e-12));
  CHECK(x.exp().mid() == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(x.sqrt().mid() == doctest::Approx(1.0));
  CHECK(Interval::exact(-3, 128).abs().mid() == doctest::Approx(3.0));
  // cosh over an interval containing zero has min exactly 1
  Interval z = Interval::hull(Interval::exact(-1, 128), Interval::exact(2, 128));
  CHECK(z.cosh().lo_d() == doctest::Approx(1.0));
  CHECK(z.cosh().hi_d() == doctest::Approx(std::cosh(2.0)).epsilon(1e-12));
}

TEST_CASE("sinhc") {
  CHECK(Interval::exact(0, 128).sinhc().mid() == doctest::Approx(1.0));
  CHECK(Interval::exact(1, 128).sinhc().mid() ==
        doctest::Approx(1.1752011936438014).epsilon(1e-14));
  // even function
  CHECK(Interval::exact(-2, 128).sinhc().mid() ==
        doctest::Approx(std::sinh(2.0) / 2.0).epsilon(1e-14));
  // interval straddling zero: lower bound is 1
  Interval z = Interval::hull(Interval::exact(Rational(-1, 2), 128),
                              Interval::exact(Rational(1, 4), 128));
  CHECK(z.sinhc().lo_d() == doctest::Approx(1.0));
}

TEST_CASE("pow and ordering") {
  Interval t = Interval::exact(Rational(3, 2), 96);
  CHECK(t.pow(4).mid() == doctest::Approx(5.0625));
  CHECK(t.pow(0).mid() == doctest::Approx(1.0));
  CHECK(Interval::exact(1, 64).certainly_less(Interval::exact(2, 64)));
  CHECK_FALSE(Interval::exact(2, 64).certainly_less(Interval::exact(2, 64)));
}
