#include <doctest.h>

#include <algorithm>
#include <random>

#include "wpvol/recursion.hpp"
#include "wpvol/store.hpp"

using namespace wpvol;

namespace {

PiPoly mono(unsigned d, long num, long den) {
  return PiPoly::monomial(d, Rational(num, den));
}

}  // namespace

TEST_CASE("signatures") {
  CHECK(Signature{0, 3}.valid());
  CHECK(Signature{1, 1}.valid());
  CHECK_FALSE(Signature{0, 2}.valid());
  CHECK_FALSE(Signature{0, 1}.valid());
  CHECK_FALSE(Signature{1, 0}.valid());
  CHECK(Signature{2, 1}.chi() == 3);
  CHECK(Signature{0, 4}.degree() == 1);
  CHECK(Signature{2, 1}.degree() == 4);
}

TEST_CASE("separating configurations") {
  // (0,4) admits none: both sides would need >= 2 boundary labels
  CHECK(sep_configs(Signature{0, 4}).empty());
  CHECK(sep_configs(Signature{1, 2}).empty());
  // (2,1): only the (1,.)|(1,.) split
  auto cfgs = sep_configs(Signature{2, 1});
  REQUIRE(cfgs.size() == 1);
  CHECK(cfgs[0].g1 == 1);
  CHECK(cfgs[0].I.empty());
  // (0,5): both sides genus 0 with two labels each; ordered count is 6
  CHECK(sep_configs(Signature{0, 5}).size() == 6);
}

TEST_CASE("base cases per convention") {
  CoeffTable paper(Convention::paper);
  CHECK(coeff(Signature{0, 3}, {0, 0, 0}, paper) == PiPoly(Rational(1)));
  CHECK(coeff(Signature{0, 3}, {1, 0, 0}, paper).is_zero());
  CHECK(coeff(Signature{1, 1}, {0}, paper) == mono(1, 1, 6));
  CHECK(coeff(Signature{1, 1}, {1}, paper) == PiPoly(Rational(1)));
  CHECK(coeff(Signature{1, 1}, {2}, paper).is_zero());

  CoeffTable half(Convention::half);
  CHECK(coeff(Signature{1, 1}, {0}, half) == mono(1, 1, 12));
  CHECK(coeff(Signature{1, 1}, {1}, half) == PiPoly(Rational(1, 2)));
}

TEST_CASE("invalid inputs rejected") {
  CoeffTable t;
  CHECK_THROWS_AS(coeff(Signature{0, 2}, {0, 0}, t), std::invalid_argument);
  CHECK_THROWS_AS(coeff(Signature{1, 0}, {}, t), std::invalid_argument);
  CHECK_THROWS_AS(coeff(Signature{0, 4}, {0}, t), std::invalid_argument);
}

TEST_CASE("V_{0,4} by hand") {
  CoeffTable t;
  CHECK(coeff(Signature{0, 4}, {0, 0, 0, 0}, t) == mono(1, 2, 1));
  CHECK(coeff(Signature{0, 4}, {1, 0, 0, 0}, t) == PiPoly(Rational(12)));
  CHECK(coeff(Signature{0, 4}, {2, 0, 0, 0}, t).is_zero());
  // single A-terms
  CHECK(term_A(Signature{0, 4}, {0, 0, 0, 0}, 2, t) == mono(1, 2, 3));
  CHECK(term_A(Signature{0, 4}, {1, 0, 0, 0}, 2, t) == PiPoly(Rational(4)));
  CHECK(term_B(Signature{0, 4}, {0, 0, 0, 0}, t).is_zero());
  CHECK(term_C(Signature{0, 4}, {0, 0, 0, 0}, t).is_zero());
}

TEST_CASE("V_{1,2} full table by hand") {
  // independent of the reporting convention
  for (Convention conv : {Convention::paper, Convention::half}) {
    CoeffTable t(conv);
    Signature s{1, 2};
    CHECK(coeff(s, {0, 0}, t) == mono(2, 1, 4));    // pi^4/4
    CHECK(coeff(s, {1, 0}, t) == mono(1, 2, 1));    // 2 pi^2
    CHECK(coeff(s, {0, 1}, t) == mono(1, 2, 1));    // symmetry
    CHECK(coeff(s, {1, 1}, t) == PiPoly(Rational(6)));
    CHECK(coeff(s, {2, 0}, t) == PiPoly(Rational(10)));
    CHECK(coeff(s, {0, 2}, t) == PiPoly(Rational(10)));
    CHECK(coeff(s, {2, 1}, t).is_zero());
    // the non-separating term of the constant coefficient: 16 u_2
    CHECK(term_B(s, {0, 0}, t) == mono(2, 7, 45));
    CHECK(term_C(s, {0, 0}, t).is_zero());
  }
}

TEST_CASE("V_{0,5} spot values by hand") {
  CoeffTable t;
  CHECK(coeff(Signature{0, 5}, {0, 0, 0, 0, 0}, t) == mono(2, 10, 1));
  CHECK(coeff(Signature{0, 5}, {1, 0, 0, 0, 0}, t) == mono(1, 72, 1));
  CHECK(term_C(Signature{0, 5}, {0, 0, 0, 0, 0}, t) == mono(2, 14, 15));
}

TEST_CASE("V_{2,1} by hand") {
  CoeffTable t;
  CHECK(coeff(Signature{2, 1}, {0}, t) == mono(4, 29, 192));
}

TEST_CASE("higher volumes are convention independent") {
  CoeffTable paper(Convention::paper), half(Convention::half);
  for (Signature sig : {Signature{2, 1}, Signature{1, 3}, Signature{2, 2},
                        Signature{0, 6}}) {
    VolumePolynomial a = volume_poly(sig, paper);
    VolumePolynomial b = volume_poly(sig, half);
    CHECK(a.coeffs == b.coeffs);
  }
}

TEST_CASE("grouped separating term equals naive subset enumeration") {
  CoeffTable t;
  for (Signature sig : {Signature{0, 5}, Signature{1, 3}, Signature{2, 2},
                        Signature{2, 1}, Signature{1, 4}}) {
    ensure_deps(sig, t);
    for (const MultiIndex& key : sorted_keys(sig.n, sig.degree()))
      CHECK(term_C(sig, key, t) == term_C_naive(sig, key, t));
  }
}

TEST_CASE("recursion decomposition and symmetry on unsorted indices") {
  CoeffTable t;
  std::mt19937_64 rng(3);
  for (Signature sig : {Signature{1, 3}, Signature{0, 6}, Signature{2, 2}}) {
    Signature targets[1] = {sig};
    fill(t, targets, 1);
    for (const MultiIndex& key : sorted_keys(sig.n, sig.degree())) {
      const PiPoly* stored = t.find(sig, key);
      MultiIndex perm = key;
      for (int trial = 0; trial < 3; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(coeff_raw_ordered(sig, perm, t) == *stored);
      }
    }
  }
}

TEST_CASE("derivative identity at x = 2 pi i") {
  // sum_k c_{g,n+1}(beta,k) 2k (-pi^2)^k / (2k+1)! = -4 pi^2 (2g-2+n) c_{g,n}(beta)
  // for honest (involution-quotiented) values
  CoeffTable t(Convention::half);
  for (auto [sig_lo, sig_hi] :
       {std::pair{Signature{0, 3}, Signature{0, 4}},
        std::pair{Signature{1, 1}, Signature{1, 2}},
        std::pair{Signature{0, 4}, Signature{0, 5}},
        std::pair{Signature{1, 2}, Signature{1, 3}},
        std::pair{Signature{2, 1}, Signature{2, 2}}}) {
    for (const MultiIndex& beta : sorted_keys(sig_lo.n, sig_lo.degree())) {
      PiPoly lhs;
      for (unsigned k = 1; k <= sig_hi.degree(); ++k) {
        MultiIndex full = beta;
        full.push_back(k);
        Rational sign = (k % 2) ? Rational(-1) : Rational(1);
        Rational weight = sign * Rational(2 * static_cast<long>(k)) /
                          Rational::factorial(2 * k + 1);
        lhs += coeff(sig_hi, full, t) * PiPoly::monomial(k, weight);
      }
      PiPoly rhs = coeff(sig_lo, beta, t) *
                   PiPoly::monomial(1, Rational(-4 * static_cast<long>(sig_lo.chi())));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("parallel fill is schedule independent") {
  std::vector<Signature> targets = signatures_upto(6, 4);
  CoeffTable a, b;
  fill(a, targets, 1);
  fill(b, targets, 4);
  CHECK(serialize_cache(a) == serialize_cache(b));
}

TEST_CASE("volume_poly surface") {
  CoeffTable t;
  VolumePolynomial vp = volume_poly(Signature{0, 4}, t);
  CHECK(vp.coeffs.size() == 2);
  CHECK(vp.vgn() == mono(1, 2, 1));
  VolumePolynomial v11 = volume_poly(Signature{1, 1}, t);
  CHECK(v11.coeffs.size() == 2);
  CHECK(v11.vgn() == mono(1, 1, 6));
}

TEST_CASE("expected key counts match enumeration") {
  for (Signature sig : {Signature{0, 3}, Signature{1, 1}, Signature{2, 1},
                        Signature{1, 4}, Signature{3, 2}, Signature{0, 7}})
    CHECK(CoeffTable::expected_key_count(sig) ==
          sorted_keys(sig.n, sig.degree()).size());
}
