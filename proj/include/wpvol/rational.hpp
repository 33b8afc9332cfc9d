#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace wpvol {

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator. Thin value-semantic wrapper around GMP's mpq_t.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long v) {
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    Rational d(den);
    mpq_div(q_, q_, d.q_);
  }
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  /// Parses "p", "p/q" or a plain decimal like "-1.25". Throws on a zero
  /// denominator or garbage input.
  static Rational parse(std::string_view s);

  /// Strict parse of "p/q" with q > 0 and gcd(p,q) = 1, as written in cache
  /// files. Rejects anything that would not round-trip byte-identically.
  static Rational parse_canonical(std::string_view s);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }

  Rational pow(unsigned e) const;

  double to_double() const { return mpq_get_d(q_); }

  /// "p/q" with the denominator always written, e.g. "1/1", "-3/4".
  std::string str_canonical() const;
  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  static Rational factorial(unsigned n);
  static Rational binomial(unsigned long n, unsigned long k);
  /// Exact binary value of d (doubles are dyadic rationals).
  static Rational from_double(double d);

  mpq_srcptr raw() const { return q_; }

 private:
  mpq_t q_;
};

}  // namespace wpvol
