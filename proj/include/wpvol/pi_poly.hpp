#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wpvol/interval.hpp"
#include "wpvol/rational.hpp"

namespace wpvol {

/// Element of Q[pi^2]: a finite sum  sum_d r_d * pi^(2d)  stored as a map
/// from the exponent d to a nonzero rational coefficient. All arithmetic is
/// exact; ordering of the represented reals is decided through validated
/// interval evaluation (see compare below).
class PiPoly {
 public:
  PiPoly() = default;
  PiPoly(const Rational& c) {
    if (!c.is_zero()) terms_[0] = c;
  }
  PiPoly(long c) : PiPoly(Rational(c)) {}

  static PiPoly monomial(unsigned d, Rational c) {
    PiPoly p;
    if (!c.is_zero()) p.terms_[d] = std::move(c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  /// Largest pi^2-exponent; requires a nonzero value.
  unsigned degree() const {
    if (is_zero()) throw std::logic_error("PiPoly: degree of zero");
    return terms_.rbegin()->first;
  }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<unsigned, Rational>& terms() const { return terms_; }
  Rational coefficient(unsigned d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  PiPoly operator-() const;
  PiPoly& operator+=(const PiPoly& o);
  PiPoly& operator-=(const PiPoly& o);
  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
  PiPoly& operator*=(const PiPoly& o) { return *this = *this * o; }
  PiPoly& operator*=(const Rational& r);
  friend PiPoly operator*(PiPoly a, const Rational& r) { return a *= r; }
  friend PiPoly operator*(const Rational& r, PiPoly a) { return a *= r; }

  friend bool operator==(const PiPoly& a, const PiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PiPoly& a, const PiPoly& b) { return !(a == b); }

  /// Validated enclosure of the represented real.
  Interval eval(mpfr_prec_t prec) const;

  /// Cache-file form: "d1:p1/q1,d2:p2/q2" with exponents ascending.
  std::string cache_str() const;
  static PiPoly parse_cache(std::string_view s);

  /// Human form, e.g. "pi^2/6 + 2" or "29*pi^16/192".
  std::string pretty() const;

 private:
  std::map<unsigned, Rational> terms_;
};

enum class Order { less, equal, greater };

/// Raised when adaptive-precision comparison hits the precision ceiling with
/// the operands still overlapping.
struct undecided_error : std::runtime_error {
  explicit undecided_error(mpfr_prec_t bits)
      : std::runtime_error("comparison undecided at precision " +
                           std::to_string(bits)),
        precision(bits) {}
  mpfr_prec_t precision;
};

inline constexpr mpfr_prec_t kCompareCeiling = 4096;

/// Decides the order of the reals represented by a and b. Equality is exact
/// (identical term maps); strict order is found by interval evaluation at
/// doubling precision. Throws undecided_error at the ceiling.
Order compare(const PiPoly& a, const PiPoly& b,
              mpfr_prec_t max_bits = kCompareCeiling);

inline bool less(const PiPoly& a, const PiPoly& b) {
  return compare(a, b) == Order::less;
}
inline bool less_equal(const PiPoly& a, const PiPoly& b) {
  return compare(a, b) != Order::greater;
}
inline bool is_positive(const PiPoly& a) {
  return !a.is_zero() && compare(a, PiPoly()) == Order::greater;
}

}  // namespace wpvol
