#include <doctest.h>

#include <random>

#include "wpvol/discrete.hpp"

using namespace wpvol;

namespace {

GridFunction random_grid(size_t arity, uint64_t seed) {
  GridFunction f;
  f.arity = arity;
  // deterministic pseudo-random rationals derived from the key alone
  f.eval = [seed](const MultiIndex& a) -> PiPoly {
    uint64_t h = 1469598103934665603ull ^ seed;
    for (unsigned v : a) h = (h ^ (v + 1)) * 1099511628211ull;
    long num = static_cast<long>(h % 41) - 20;
    long den = static_cast<long>((h >> 7) % 9) + 1;
    return PiPoly(Rational(num, den));
  };
  return f;
}

}  // namespace

TEST_CASE("delta basics") {
  CoeffTable t;
  GridFunction c04 = GridFunction::from_table(Signature{0, 4}, t);
  // constant in no direction: first difference at 0 is 2 pi^2 - 12
  PiPoly d = delta(c04, {1, 0, 0, 0}, {0, 0, 0, 0});
  PiPoly want = PiPoly::monomial(1, Rational(2)) - PiPoly(Rational(12));
  CHECK(d == want);
  // second difference: c(0) - 2 c(e1) + c(2 e1)
  PiPoly d2 = delta(c04, {2, 0, 0, 0}, {0, 0, 0, 0});
  CHECK(d2 == PiPoly::monomial(1, Rational(2)) - PiPoly(Rational(24)));

  GridFunction constant{2, [](const MultiIndex&) { return PiPoly(Rational(7)); }};
  CHECK(delta(constant, {1, 0}, {3, 4}).is_zero());
  CHECK(delta(constant, {0, 0}, {3, 4}) == PiPoly(Rational(7)));
}

TEST_CASE("delta matches the recursive definition and commutes") {
  GridFunction f = random_grid(2, 99);
  for (unsigned m1 = 0; m1 <= 3; ++m1)
    for (unsigned m2 = 0; m2 <= 2; ++m2)
      for (unsigned a1 = 0; a1 <= 3; ++a1)
        for (unsigned a2 = 0; a2 <= 3; ++a2) {
          CHECK(delta(f, {m1, m2}, {a1, a2}) ==
                delta_recursive(f, {m1, m2}, {a1, a2}));
        }
  // commutation: order of coordinates in the recursive reduction is free
  GridFunction g = random_grid(3, 5);
  CHECK(delta(g, {1, 1, 0}, {0, 1, 2}) == delta_recursive(g, {1, 1, 0}, {0, 1, 2}));
}

TEST_CASE("first differences of coefficients are nonnegative") {
  CoeffTable t;
  for (Signature sig : {Signature{1, 2}, Signature{2, 1}, Signature{0, 5}}) {
    GridFunction f = GridFunction::from_table(sig, t);
    for (const MultiIndex& key : sorted_keys(sig.n, sig.degree()))
      for (unsigned i = 0; i < sig.n; ++i) {
        MultiIndex m(sig.n, 0);
        m[i] = 1;
        PiPoly d = delta(f, m, key);
        CHECK(compare(d, PiPoly()) != Order::less);
      }
  }
}

TEST_CASE("discrete integration identity") {
  GridFunction f = random_grid(3, 17);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    MultiIndex alpha{static_cast<unsigned>(rng() % 5),
                     static_cast<unsigned>(rng() % 5),
                     static_cast<unsigned>(rng() % 5)};
    auto [lhs, rhs] = discrete_integral_sides(f, alpha);
    CHECK(lhs == rhs);
  }
  CoeffTable t;
  GridFunction c12 = GridFunction::from_table(Signature{1, 2}, t);
  auto [lhs, rhs] = discrete_integral_sides(c12, {2, 1});
  CHECK(lhs == rhs);
  CHECK(lhs == coeff(Signature{1, 2}, {2, 1}, t));
}

TEST_CASE("convolution-derivative identity") {
  std::mt19937_64 rng(23);
  std::vector<std::vector<PiPoly>> c(6, std::vector<PiPoly>(6));
  for (auto& row : c)
    for (auto& v : row)
      v = PiPoly(Rational(static_cast<long>(rng() % 19) - 9,
                          static_cast<long>(rng() % 6) + 1));
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned k = 0; k <= 8; ++k) {
      auto [lhs, rhs] = conv_derivative_sides(c, m, k);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("faulhaber") {
  // sum_{k<m} k^2 = m(m-1)(2m-1)/6
  Poly f2 = faulhaber(2);
  for (unsigned m : {0u, 1u, 2u, 5u, 9u}) {
    long want = 0;
    for (unsigned k = 0; k < m; ++k) want += static_cast<long>(k) * k;
    CHECK(f2.eval({m}) == PiPoly(Rational(want)));
  }
}

TEST_CASE("taylor_poly reproduces low-degree polynomials") {
  // f(alpha) = p_2(alpha_1) = (2a+1)(2a) has degree 2
  GridFunction f{1, [](const MultiIndex& a) {
                   return PiPoly(Rational(p_k(2, a[0])));
                 }};
  Poly p = taylor_poly(f, 2);
  for (unsigned a = 0; a <= 12; ++a)
    CHECK(p.eval({a}) == PiPoly(Rational(p_k(2, a))));

  GridFunction c{2, [](const MultiIndex&) { return PiPoly(Rational(7)); }};
  Poly pc = taylor_poly(c, 0);
  CHECK(pc.eval({4, 9}) == PiPoly(Rational(7)));

  // a mixed bivariate polynomial of total degree 3
  GridFunction g{2, [](const MultiIndex& a) {
                   long x = a[0], y = a[1];
                   return PiPoly(Rational(3 * x * x * y - 2 * y * y + x - 5));
                 }};
  Poly pg = taylor_poly(g, 3);
  for (unsigned x = 0; x <= 6; ++x)
    for (unsigned y = 0; y <= 6; ++y) {
      long xx = x, yy = y;
      CHECK(pg.eval({x, y}) ==
            PiPoly(Rational(3 * xx * xx * yy - 2 * yy * yy + xx - 5)));
    }
}

TEST_CASE("shifted_taylor with a = 0 degenerates to taylor_poly") {
  GridFunction f = random_grid(2, 44);
  ShiftedPoly sp = shifted_taylor(f, 2, 0);
  CHECK(sp.regions.size() == 1);
  Poly direct = taylor_poly(f, 2);
  for (unsigned x = 0; x <= 4; ++x)
    for (unsigned y = 0; y <= 4; ++y) CHECK(sp.eval({x, y}) == direct.eval({x, y}));
}

TEST_CASE("shifted_taylor reproduces members of its own class and small values") {
  // synthetic member of the class: a product of per-variable functions that
  // are polynomial (degree 1) past the threshold and arbitrary below, plus a
  // pure indicator bump
  const unsigned a = 3, K = 2;
  GridFunction f{2, [a](const MultiIndex& al) -> PiPoly {
                   auto A = [a](unsigned v) -> long {
                     return v < a ? static_cast<long>(v * v + 7)
                                  : 2L * v + 1;
                   };
                   auto B = [a](unsigned v) -> long {
                     return v < a ? 3L * v : static_cast<long>(v) - 4;
                   };
                   long bump = (al[0] == 2 && al[1] == 0) ? 13 : 0;
                   return PiPoly(Rational(A(al[0]) * B(al[1]) + bump));
                 }};
  ShiftedPoly sp = shifted_taylor(f, K, a);
  for (unsigned x = 0; x <= 8; ++x)
    for (unsigned y = 0; y <= 8; ++y) CHECK(sp.eval({x, y}) == f.eval({x, y}));

  // arbitrary function: agreement below the threshold is unconditional
  GridFunction g = random_grid(2, 69);
  ShiftedPoly spg = shifted_taylor(g, 1, 2);
  for (unsigned x = 0; x < 2; ++x)
    for (unsigned y = 0; y < 2; ++y) CHECK(spg.eval({x, y}) == g.eval({x, y}));
}

TEST_CASE("regions partition the lattice") {
  GridFunction f = random_grid(2, 70);
  ShiftedPoly sp = shifted_taylor(f, 1, 2);
  CHECK(sp.regions.size() == 9);  // (2+1)^2 with a = 2
  for (unsigned x = 0; x <= 5; ++x)
    for (unsigned y = 0; y <= 5; ++y) CHECK_NOTHROW(sp.region_of({x, y}));
}

TEST_CASE("build_FN structure and evaluation") {
  CoeffTable t;
  Signature sig{2, 1};
  const unsigned N = 1, a = 4;
  Approximant ap = build_FN(sig, N, a, t);
  CHECK(ap.constant_mass() == vgn(sig, t));
  CHECK(ap.trig_degree() <= 2 * N);
  for (const auto& term : ap.terms) {
    CHECK((term.iplus & term.iminus) == 0);
    for (unsigned e : term.mono) CHECK(e % 2 == 0);
  }
  std::vector<Rational> zero{Rational(0)};
  CHECK(ap.eval(zero, 192).mid() == doctest::Approx(1.0).epsilon(1e-30));

  // evaluation equals the truncated series of the shifted expansion
  ShiftedPoly sp = shifted_coeff_expansion(sig, N, a, t);
  std::vector<Rational> x{Rational(2)};
  Interval series(192);
  for (unsigned al = 0; al <= 60; ++al) {
    Rational w = (x[0] / Rational(2)).pow(2 * al) / Rational::factorial(2 * al + 1);
    series = series + sp.eval({al}).eval(192) * Interval::exact(w, 192);
  }
  series = series / vgn(sig, t).eval(192);
  CHECK((series - ap.eval(x, 192)).abs().hi_d() < 1e-25);
}

TEST_CASE("build_FN exactness below the threshold, two variables") {
  CoeffTable t;
  Signature sig{2, 2};
  const unsigned N = 1, a = 4;
  ShiftedPoly sp = shifted_coeff_expansion(sig, N, a, t);
  GridFunction f = GridFunction::from_table(sig, t);
  for (unsigned x = 0; x < a; ++x)
    for (unsigned y = 0; y < a; ++y) CHECK(sp.eval({x, y}) == f.eval({x, y}));
  Approximant ap = build_FN(sig, N, a, t);
  std::vector<Rational> zero{Rational(0), Rational(0)};
  CHECK(ap.eval(zero, 192).mid() == doctest::Approx(1.0).epsilon(1e-30));
}

TEST_CASE("derivative statistic at N = 0 equals one") {
  CoeffTable t;
  std::vector<unsigned> gs{2, 3};
  DerivStatReport rep = derivative_bound_stat(1, 0, 0, gs, t);
  REQUIRE(rep.per_g.size() == 2);
  for (const DerivStat& st : rep.per_g) {
    CHECK_FALSE(st.empty);
    CHECK(st.sup == doctest::Approx(1.0).epsilon(1e-30));
  }
  CHECK(rep.bounded_trend);
}

TEST_CASE("derivative statistic reports empty admissible sets") {
  CoeffTable t;
  std::vector<unsigned> gs{2};
  // n = 1, g = 2: degree box is 4, so alpha_1 >= 8 is impossible
  DerivStatReport rep = derivative_bound_stat(1, 2, 8, gs, t);
  REQUIRE(rep.per_g.size() == 1);
  CHECK(rep.per_g[0].empty);
  CHECK_FALSE(rep.bounded_trend);
}
