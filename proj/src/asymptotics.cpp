#include "wpvol/asymptotics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wpvol {

double sinhc(double x) {
  double a = std::fabs(x);
  if (a < 1e-4) {
    // sinh(x)/x = 1 + x^2/6 + x^4/120 + O(x^6); x^6 term < 1e-26 here
    double x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

Rational l1(std::span<const Rational> x) {
  Rational s(0);
  for (const Rational& v : x) s += v;
  return s;
}

Interval jap(std::span<const Rational> x, mpfr_prec_t prec) {
  Rational n1 = l1(x);
  Interval s = Interval::exact(Rational(1) + n1 * n1, prec);
  return s.sqrt();
}

Interval jap(unsigned g, mpfr_prec_t prec) {
  Interval s = Interval::exact(Rational(1) + Rational(g) * Rational(g), prec);
  return s.sqrt();
}

namespace {

/// x^(2a) / (2^(2a) (2a+1)!) as an exact rational.
Rational norm_weight(const Rational& x, unsigned a) {
  return (x / Rational(2)).pow(2 * a) / Rational::factorial(2 * a + 1);
}

}  // namespace

PiPoly eval_volume_exact(Signature sig, std::span<const Rational> x,
                         CoeffTable& table) {
  if (x.size() != sig.n) throw std::invalid_argument("eval_volume_exact: arity");
  if (!table.complete(sig)) {
    Signature t[1] = {sig};
    fill(table, t, 1);
  }
  unsigned deg = sig.degree();
  // per-coordinate normalized powers
  std::vector<std::vector<Rational>> w(sig.n);
  for (unsigned j = 0; j < sig.n; ++j) {
    w[j].reserve(deg + 1);
    for (unsigned a = 0; a <= deg; ++a) w[j].push_back(norm_weight(x[j], a));
  }
  PiPoly total;
  MultiIndex alpha(sig.n, 0);
  // iterate all multi-indices with |alpha| <= deg
  auto rec = [&](auto&& self, unsigned pos, unsigned budget) -> void {
    if (pos == sig.n) {
      Rational factor(1);
      for (unsigned j = 0; j < sig.n; ++j) factor *= w[j][alpha[j]];
      if (!factor.is_zero())
        total += *table.find(sig, sorted_desc(alpha)) * factor;
      return;
    }
    for (unsigned v = 0; v <= budget; ++v) {
      alpha[pos] = v;
      self(self, pos + 1, budget - v);
    }
  };
  rec(rec, 0, deg);
  return total;
}

Interval eval_volume(Signature sig, std::span<const Rational> x, CoeffTable& table,
                     mpfr_prec_t prec) {
  return eval_volume_exact(sig, x, table).eval(prec);
}

Interval F0(std::span<const Rational> x, mpfr_prec_t prec) {
  Interval r = Interval::exact(1, prec);
  for (const Rational& v : x) {
    Interval h = Interval::exact(v / Rational(2), prec);
    r = r * h.sinhc();
  }
  return r;
}

namespace {

struct Trig {
  Interval c, s;  // cosh(x/2), sinhc(x/2)
  Trig(const Rational& x, mpfr_prec_t prec)
      : c(Interval::exact(x / Rational(2), prec).cosh()),
        s(Interval::exact(x / Rational(2), prec).sinhc()) {}
};

Interval second_order_single(const std::vector<Trig>& t,
                             std::span<const Rational> x, mpfr_prec_t prec) {
  // sum_i [c_i + 1 - (x_i^2/16 + 2) s_i] prod_{k != i} s_k
  Interval sum(prec);
  Interval one = Interval::exact(1, prec);
  for (size_t i = 0; i < t.size(); ++i) {
    Interval coef =
        Interval::exact(x[i] * x[i] / Rational(16) + Rational(2), prec);
    Interval term = t[i].c + one - coef * t[i].s;
    for (size_t k = 0; k < t.size(); ++k)
      if (k != i) term = term * t[k].s;
    sum = sum + term;
  }
  return sum;
}

Interval second_order_pair(const std::vector<Trig>& t, mpfr_prec_t prec) {
  // sum_{i<j} [c_i c_j + 1 - 2 s_i s_j] prod_{k notin {i,j}} s_k
  Interval sum(prec);
  Interval one = Interval::exact(1, prec);
  Interval two = Interval::exact(2, prec);
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j) {
      Interval term = t[i].c * t[j].c + one - two * t[i].s * t[j].s;
      for (size_t k = 0; k < t.size(); ++k)
        if (k != i && k != j) term = term * t[k].s;
      sum = sum + term;
    }
  return sum;
}

}  // namespace

Interval F1(Signature sig, std::span<const Rational> x, CoeffTable& table,
            mpfr_prec_t prec) {
  if (x.size() != sig.n) throw std::invalid_argument("F1: arity");
  std::vector<Trig> t;
  t.reserve(sig.n);
  for (const Rational& v : x) t.emplace_back(v, prec);
  Interval r = Interval::exact(1, prec);
  for (const Trig& tr : t) r = r * tr.s;

  Interval v_gn = vgn(sig, table).eval(prec);
  if (sig.g >= 1) {
    Interval ratio = vgn(Signature{sig.g - 1, sig.n + 1}, table).eval(prec) / v_gn;
    r = r + Interval::exact(8, prec) * ratio * second_order_single(t, x, prec);
  }
  if (sig.n >= 2) {
    Interval ratio = vgn(Signature{sig.g, sig.n - 1}, table).eval(prec) / v_gn;
    r = r - Interval::exact(4, prec) * ratio * second_order_pair(t, prec);
  }
  return r;
}

Interval f1(std::span<const Rational> x, mpfr_prec_t prec) {
  std::vector<Trig> t;
  t.reserve(x.size());
  for (const Rational& v : x) t.emplace_back(v, prec);
  Interval pi2 = Interval::pi(prec);
  pi2 = pi2 * pi2;
  Interval r = second_order_single(t, x, prec) / pi2;
  if (x.size() >= 2)
    r = r - second_order_pair(t, prec) / (Interval::exact(2, prec) * pi2);
  return r;
}

int64_t p_k(unsigned k, unsigned alpha) {
  int64_t r = 1;
  for (unsigned j = 0; j < k; ++j)
    r *= 2 * static_cast<int64_t>(alpha) + 1 - static_cast<int64_t>(j);
  return r;
}

Rational p_k_rat(unsigned k, const Rational& alpha) {
  Rational r(1);
  for (unsigned j = 0; j < k; ++j)
    r *= Rational(2) * alpha + Rational(1) - Rational(static_cast<long>(j));
  return r;
}

Interval pk_generating_sum(unsigned k, const Rational& x, unsigned truncation,
                           mpfr_prec_t prec) {
  Rational sum(0);
  for (unsigned a = 0; a <= truncation; ++a)
    sum += Rational(p_k(k, a)) * norm_weight(x, a);
  return Interval::exact(sum, prec);
}

Interval pk_closed_form(unsigned k, const Rational& x, mpfr_prec_t prec) {
  Interval h = Interval::exact(x / Rational(2), prec);
  if (k % 2 == 0) return h.pow(k) * h.sinhc();
  return h.pow(k - 1) * h.cosh();
}

PiPoly psi1(Signature sig, const MultiIndex& alpha, CoeffTable& table) {
  if (!sig.valid()) throw std::invalid_argument("psi1: invalid signature");
  if (alpha.size() != sig.n) throw std::invalid_argument("psi1: arity");
  PiPoly out;
  if (sig.g >= 1) {
    long a1 = alpha[0];
    long f = 4 * a1 - 1 + (a1 == 0 ? 2 : 0);
    out += vgn(Signature{sig.g - 1, sig.n + 1}, table) * Rational(4 * f);
  }
  if (sig.n >= 2) {
    PiPoly v = vgn(Signature{sig.g, sig.n - 1}, table);
    for (unsigned j = 1; j < sig.n; ++j) {
      long aj = alpha[j];
      long f = 4 * aj + 2 - ((alpha[0] == 0 && aj == 0) ? 1 : 0);
      out += v * Rational(4 * f);
    }
  }
  return out;
}

PiPoly c_hat1(Signature sig, const MultiIndex& alpha, CoeffTable& table) {
  if (!sig.valid()) throw std::invalid_argument("c_hat1: invalid signature");
  if (alpha.size() != sig.n) throw std::invalid_argument("c_hat1: arity");
  PiPoly out = vgn(sig, table);
  if (sig.g >= 1) {
    Rational s(0);
    for (unsigned i = 0; i < sig.n; ++i) {
      unsigned a = alpha[i];
      s += Rational(p_k(1, a)) + Rational(a == 0 ? 1 : 0) -
           Rational(p_k(2, a)) / Rational(4) - Rational(2);
    }
    out += vgn(Signature{sig.g - 1, sig.n + 1}, table) * (Rational(8) * s);
  }
  if (sig.n >= 2) {
    Rational s(0);
    for (unsigned i = 0; i < sig.n; ++i)
      for (unsigned j = i + 1; j < sig.n; ++j) {
        unsigned ai = alpha[i], aj = alpha[j];
        s += Rational(p_k(1, ai) * p_k(1, aj)) +
             Rational((ai == 0 && aj == 0) ? 1 : 0) - Rational(2);
      }
    out -= vgn(Signature{sig.g, sig.n - 1}, table) * (Rational(4) * s);
  }
  return out;
}

Interval lambda_intensity(const Rational& a, const Rational& b, double abs_err,
                          mpfr_prec_t prec) {
  if (!(Rational(0) < a) || !(a <= b))
    throw std::invalid_argument("lambda_intensity: need 0 < a <= b");
  if (a == b) return Interval::exact(0, prec);
  // (2/x) sinh^2(x/2) = (cosh x - 1)/x, so the antiderivative from 0 is the
  // entire series  sum_{k>=1} x^(2k) / ((2k) (2k)!)
  Rational err = Rational::from_double(abs_err);
  Rational b2 = b * b;
  for (unsigned T = 8;; T += 8) {
    // ratio of consecutive terms at x = b is <= b^2/((2T+3)(2T+4)) past T
    Rational r = b2 / Rational((2L * T + 3) * (2L * T + 4));
    if (!(r <= Rational(1, 2))) continue;
    Rational first_tail = b.pow(2 * T + 2) /
                          (Rational(2L * T + 2) * Rational::factorial(2 * T + 2));
    Rational tail_bound = Rational(2) * first_tail;
    if (!(tail_bound <= err)) continue;
    Rational sum(0);
    for (unsigned k = 1; k <= T; ++k)
      sum += (b.pow(2 * k) - a.pow(2 * k)) /
             (Rational(2 * static_cast<long>(k)) * Rational::factorial(2 * k));
    // true value lies in [sum, sum + tail_bound]
    return Interval::hull(Interval::exact(sum, prec),
                          Interval::exact(sum + tail_bound, prec));
  }
}

}  // namespace wpvol
