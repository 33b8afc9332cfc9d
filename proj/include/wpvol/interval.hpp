#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "wpvol/rational.hpp"

namespace wpvol {

/// Validated enclosure [lo, hi] of a real number, with directed rounding on
/// every operation. Used for all sign/ordering decisions on values in
/// Q[pi^2] and for the high-precision residual statistics.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval exact(long v, mpfr_prec_t prec);
  static Interval exact(const Rational& v, mpfr_prec_t prec);
  /// Enclosure of pi with width < 2^(1-prec).
  static Interval pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return prec_; }

  bool contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
  }
  bool is_positive() const { return mpfr_sgn(lo_) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_) < 0; }
  /// True when this interval lies strictly below o.
  bool certainly_less(const Interval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
  }

  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid() const;
  double width() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws std::domain_error if b contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);

  Interval pow(unsigned e) const;
  Interval sqrt() const;  // requires lo >= 0
  Interval exp() const;
  Interval sinh() const;
  Interval cosh() const;
  Interval abs() const;
  /// sinh(x)/x extended by 1 at 0; even and increasing in |x|.
  Interval sinhc() const;

  /// Smallest interval containing both operands (at max precision).
  static Interval hull(const Interval& a, const Interval& b);

  std::string str() const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

}  // namespace wpvol
