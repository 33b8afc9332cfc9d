#include "wpvol/interval.hpp"

#include <algorithm>
#include <cstdio>

namespace wpvol {

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  if (prec_ != o.prec_) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
  }
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval Interval::exact(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::exact(const Rational& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, v.raw(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  // two guard bits keep the enclosure width below 2^(1-prec)
  Interval r(prec + 2);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

double Interval::mid() const {
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(m, m, 2, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  bool first = true;
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  for (auto x : as)
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero())
    throw std::domain_error("Interval: division by an interval containing 0");
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  bool first = true;
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  for (auto x : as)
    for (auto y : bs) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval Interval::pow(unsigned e) const {
  Interval r = Interval::exact(1, prec_);
  Interval base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0)
    throw std::domain_error("Interval: sqrt of a possibly negative value");
  Interval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sinh() const {
  Interval r(prec_);
  mpfr_sinh(r.lo_, lo_, MPFR_RNDD);
  mpfr_sinh(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::cosh() const {
  Interval r(prec_);
  if (contains_zero()) {
    mpfr_set_si(r.lo_, 1, MPFR_RNDD);
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_neg(m, lo_, MPFR_RNDU);
    if (mpfr_cmp(m, hi_) < 0) mpfr_set(m, hi_, MPFR_RNDU);
    mpfr_cosh(r.hi_, m, MPFR_RNDU);
    mpfr_clear(m);
  } else if (mpfr_sgn(lo_) > 0) {
    mpfr_cosh(r.lo_, lo_, MPFR_RNDD);
    mpfr_cosh(r.hi_, hi_, MPFR_RNDU);
  } else {
    mpfr_cosh(r.lo_, hi_, MPFR_RNDD);
    mpfr_cosh(r.hi_, lo_, MPFR_RNDU);
  }
  return r;
}

Interval Interval::abs() const {
  Interval r(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  if (mpfr_cmp(r.hi_, hi_) < 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sinhc() const {
  // even, increasing in |x|: reduce to [m, M] with 0 <= m <= M
  Interval r(prec_);
  Interval a = abs();
  if (mpfr_sgn(a.lo_) == 0) {
    mpfr_set_si(r.lo_, 1, MPFR_RNDD);
  } else {
    mpfr_sinh(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_div(r.lo_, r.lo_, a.lo_, MPFR_RNDD);
    if (mpfr_cmp_si(r.lo_, 1) < 0) mpfr_set_si(r.lo_, 1, MPFR_RNDD);
  }
  if (mpfr_sgn(a.hi_) == 0) {
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
  } else {
    mpfr_sinh(r.hi_, a.hi_, MPFR_RNDU);
    mpfr_div(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
  }
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

std::string Interval::str() const {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "[%.8Rg, %.8Rg]", lo_, hi_);
  return buf;
}

}  // namespace wpvol
