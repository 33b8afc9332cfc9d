#include "wpvol/discrete.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <stdexcept>

#include "wpvol/zeta.hpp"

namespace wpvol {

GridFunction GridFunction::from_table(Signature sig, CoeffTable& table) {
  if (!table.complete(sig)) {
    Signature t[1] = {sig};
    fill(table, t, 1);
  }
  CoeffTable* tp = &table;
  GridFunction f;
  f.arity = sig.n;
  f.eval = [sig, tp](const MultiIndex& alpha) -> PiPoly {
    if (mi_sum(alpha) > sig.degree()) return PiPoly();
    return *tp->find(sig, sorted_desc(alpha));
  };
  return f;
}

GridFunction GridFunction::from_map(size_t arity,
                                    std::map<MultiIndex, PiPoly> values) {
  auto shared = std::make_shared<std::map<MultiIndex, PiPoly>>(std::move(values));
  GridFunction f;
  f.arity = arity;
  f.eval = [shared](const MultiIndex& alpha) -> PiPoly {
    auto it = shared->find(alpha);
    return it == shared->end() ? PiPoly() : it->second;
  };
  return f;
}

PiPoly delta(const GridFunction& f, const MultiIndex& m, const MultiIndex& alpha) {
  if (m.size() != f.arity || alpha.size() != f.arity)
    throw std::invalid_argument("delta: arity mismatch");
  PiPoly out;
  MultiIndex beta(m.size(), 0);
  MultiIndex point(m.size());
  for (;;) {
    Rational w(1);
    unsigned parity = 0;
    for (size_t i = 0; i < m.size(); ++i) {
      w *= Rational::binomial(m[i], beta[i]);
      parity += beta[i];
      point[i] = alpha[i] + beta[i];
    }
    if (parity % 2) w = -w;
    out += f.eval(point) * w;
    size_t idx = 0;
    while (idx < m.size()) {
      if (++beta[idx] <= m[idx]) break;
      beta[idx] = 0;
      ++idx;
    }
    if (idx == m.size()) break;
  }
  return out;
}

PiPoly delta_recursive(const GridFunction& f, const MultiIndex& m,
                       const MultiIndex& alpha) {
  size_t i = 0;
  while (i < m.size() && m[i] == 0) ++i;
  if (i == m.size()) return f.eval(alpha);
  MultiIndex m2 = m;
  --m2[i];
  MultiIndex shifted = alpha;
  ++shifted[i];
  return delta_recursive(f, m2, alpha) - delta_recursive(f, m2, shifted);
}

std::pair<PiPoly, PiPoly> discrete_integral_sides(const GridFunction& f,
                                                  const MultiIndex& alpha) {
  if (alpha.size() != f.arity)
    throw std::invalid_argument("discrete_integral_sides: arity mismatch");
  PiPoly lhs = f.eval(alpha);
  PiPoly rhs = f.eval(MultiIndex(f.arity, 0));
  for (size_t i = 0; i < f.arity; ++i) {
    // points (0^(i-1), k, alpha_{i+1}, ..)
    MultiIndex p(alpha);
    for (size_t j = 0; j < i; ++j) p[j] = 0;
    for (unsigned k = 0; k < alpha[i]; ++k) {
      p[i] = k;
      MultiIndex up = p;
      ++up[i];
      rhs -= f.eval(p) - f.eval(up);
    }
  }
  return {lhs, rhs};
}

std::pair<PiPoly, PiPoly> conv_derivative_sides(
    const std::vector<std::vector<PiPoly>>& c, unsigned m, unsigned k) {
  if (m < 1) throw std::invalid_argument("conv_derivative_sides: need m >= 1");
  GridFunction c2;
  c2.arity = 2;
  c2.eval = [&c](const MultiIndex& p) -> PiPoly {
    if (p[0] >= c.size()) return PiPoly();
    if (p[1] >= c[p[0]].size()) return PiPoly();
    return c[p[0]][p[1]];
  };
  GridFunction v;
  v.arity = 1;
  v.eval = [&c2](const MultiIndex& p) -> PiPoly {
    PiPoly s;
    for (unsigned k1 = 0; k1 <= p[0]; ++k1) s += c2.eval({k1, p[0] - k1});
    return s;
  };
  PiPoly lhs = delta(v, {m}, {k});

  PiPoly rhs;
  for (unsigned k1 = 0; k1 <= k; ++k1) {
    unsigned k2 = k - k1;
    if (k1 >= k2)
      rhs += delta(c2, {m, 0}, {k1, k2});
    else
      rhs += delta(c2, {0, m}, {k1, k2});
  }
  unsigned p1 = (k + 1) / 2, p2 = k / 2 + 1;
  for (unsigned m1 = 0; m1 + 1 <= m; ++m1) {
    unsigned m2 = m - 1 - m1;
    rhs -= delta(c2, {m1, m2}, {p1, p2});
  }
  return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Multivariate polynomials over Q[pi^2]

Poly Poly::constant(size_t nvars, PiPoly c) {
  Poly p(nvars);
  if (!c.is_zero()) p.mono_[std::vector<unsigned>(nvars, 0)] = std::move(c);
  return p;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : mono_) {
    unsigned s = 0;
    for (unsigned v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_monomial(std::vector<unsigned> exps, const PiPoly& c) {
  if (c.is_zero()) return;
  auto it = mono_.find(exps);
  if (it == mono_.end()) {
    mono_.emplace(std::move(exps), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) mono_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.mono_) add_monomial(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.mono_) add_monomial(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.nvars_);
  for (const auto& [ea, ca] : a.mono_)
    for (const auto& [eb, cb] : b.mono_) {
      std::vector<unsigned> e(a.nvars_);
      for (size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_monomial(std::move(e), ca * cb);
    }
  return r;
}

Poly Poly::scaled(const PiPoly& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : mono_) r.mono_[e] = v * c;
  return r;
}

PiPoly Poly::eval(const MultiIndex& alpha) const {
  if (alpha.size() != nvars_) throw std::invalid_argument("Poly::eval arity");
  PiPoly out;
  for (const auto& [e, c] : mono_) {
    Rational f(1);
    for (size_t i = 0; i < nvars_; ++i)
      if (e[i]) f *= Rational(static_cast<long>(alpha[i])).pow(e[i]);
    out += c * f;
  }
  return out;
}

Poly Poly::substitute(size_t var, const Poly& u) const {
  unsigned maxe = 0;
  for (const auto& [e, c] : mono_) maxe = std::max(maxe, e[var]);
  std::vector<Poly> pw;
  pw.emplace_back(Poly::constant(nvars_, PiPoly(Rational(1))));
  for (unsigned k = 1; k <= maxe; ++k) pw.push_back(pw.back() * u);
  Poly r(nvars_);
  for (const auto& [e, c] : mono_) {
    std::vector<unsigned> rest = e;
    unsigned k = rest[var];
    rest[var] = 0;
    Poly base(nvars_);
    base.add_monomial(rest, c);
    r += base * pw[k];
  }
  return r;
}

Poly faulhaber(unsigned e) {
  // sum_{k=0}^{m-1} k^e = (1/(e+1)) sum_j C(e+1,j) B_j m^(e+1-j), B_1 = -1/2
  Poly p(1);
  Rational inv(1, static_cast<long>(e) + 1);
  for (unsigned j = 0; j <= e; ++j) {
    Rational c = Rational::binomial(e + 1, j) * bernoulli(j) * inv;
    if (!c.is_zero()) p.add_monomial({e + 1 - j}, PiPoly(c));
  }
  return p;
}

namespace {

/// Sum of P over the i-th variable from 0 to alpha_i - 1 with variables
/// before i pinned to 0: a polynomial in (alpha_i, ..., alpha_n).
Poly prefix_sum(const Poly& P, size_t i) {
  Poly r(P.nvars());
  for (const auto& [e, c] : P.monomials()) {
    bool drop = false;
    for (size_t j = 0; j < i; ++j)
      if (e[j] > 0) {
        drop = true;
        break;
      }
    if (drop) continue;
    Poly f = faulhaber(e[i]);  // univariate in m = alpha_i
    for (const auto& [fe, fc] : f.monomials()) {
      std::vector<unsigned> out = e;
      out[i] = fe[0];
      r.add_monomial(std::move(out), c * fc);
    }
  }
  return r;
}

GridFunction delta_i(const GridFunction& f, size_t i) {
  GridFunction d;
  d.arity = f.arity;
  d.eval = [f, i](const MultiIndex& alpha) -> PiPoly {
    MultiIndex up = alpha;
    ++up[i];
    return f.eval(alpha) - f.eval(up);
  };
  return d;
}

}  // namespace

Poly taylor_poly(const GridFunction& f, unsigned K) {
  size_t n = f.arity;
  Poly r = Poly::constant(n, f.eval(MultiIndex(n, 0)));
  if (K == 0) return r;
  for (size_t i = 0; i < n; ++i) {
    Poly Pi = taylor_poly(delta_i(f, i), K - 1);
    r -= prefix_sum(Pi, i);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Shifted expansion

PiPoly ShiftedPoly::eval(const MultiIndex& alpha) const {
  const Region& reg = region_of(alpha);
  MultiIndex gamma;
  for (size_t i = 0; i < arity; ++i)
    if (reg.mask & (1u << i)) gamma.push_back(alpha[i] - a);
  return reg.poly.eval(gamma);
}

const ShiftedPoly::Region& ShiftedPoly::region_of(const MultiIndex& alpha) const {
  uint32_t mask = 0;
  MultiIndex beta;
  for (size_t i = 0; i < arity; ++i) {
    if (alpha[i] >= a)
      mask |= 1u << i;
    else
      beta.push_back(alpha[i]);
  }
  for (const Region& r : regions)
    if (r.mask == mask && r.beta == beta) return r;
  throw std::logic_error("ShiftedPoly: missing region");
}

ShiftedPoly shifted_taylor(const GridFunction& f, unsigned K, unsigned a) {
  size_t n = f.arity;
  ShiftedPoly sp;
  sp.arity = n;
  sp.K = K;
  sp.a = a;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    size_t r = static_cast<size_t>(std::popcount(mask));
    size_t comp = n - r;
    if (a == 0 && comp > 0) continue;  // no admissible beta below threshold 0
    std::vector<size_t> ivars, cvars;
    for (size_t i = 0; i < n; ++i)
      (mask & (1u << i) ? ivars : cvars).push_back(i);
    MultiIndex beta(comp, 0);
    for (;;) {
      GridFunction g;
      g.arity = r;
      MultiIndex beta_copy = beta;
      g.eval = [f, ivars, cvars, beta_copy, a](const MultiIndex& gamma) -> PiPoly {
        MultiIndex alpha(f.arity);
        for (size_t k = 0; k < ivars.size(); ++k) alpha[ivars[k]] = gamma[k] + a;
        for (size_t k = 0; k < cvars.size(); ++k) alpha[cvars[k]] = beta_copy[k];
        return f.eval(alpha);
      };
      ShiftedPoly::Region reg;
      reg.mask = mask;
      reg.beta = beta;
      reg.poly = taylor_poly(g, K);
      sp.regions.push_back(std::move(reg));
      // next beta
      size_t idx = 0;
      while (idx < comp) {
        if (++beta[idx] < a) break;
        beta[idx] = 0;
        ++idx;
      }
      if (idx == comp || comp == 0) break;
    }
  }
  return sp;
}

// ---------------------------------------------------------------------------
// Constructive approximant

namespace {

/// mono_to_p[j][k]: coefficient of p_k in the expansion of alpha^j.
std::vector<std::vector<Rational>> mono_to_p_table(unsigned D) {
  // p_k as a polynomial in alpha
  std::vector<std::vector<Rational>> P(D + 1);
  P[0] = {Rational(1)};
  for (unsigned k = 1; k <= D; ++k) {
    // p_k = p_{k-1} * (2 alpha + 1 - (k-1))
    const std::vector<Rational>& prev = P[k - 1];
    std::vector<Rational> cur(k + 1, Rational(0));
    Rational c0 = Rational(1) - Rational(static_cast<long>(k) - 1);
    for (unsigned j = 0; j < prev.size(); ++j) {
      cur[j + 1] += prev[j] * Rational(2);
      cur[j] += prev[j] * c0;
    }
    P[k] = std::move(cur);
  }
  std::vector<std::vector<Rational>> M(D + 1);
  for (unsigned j = 0; j <= D; ++j) {
    std::vector<Rational> residual(j + 1, Rational(0));
    residual[j] = Rational(1);
    std::vector<Rational> coeffs(j + 1, Rational(0));
    for (int k = static_cast<int>(j); k >= 0; --k) {
      Rational c = residual[k] / P[k][k];
      coeffs[k] = c;
      if (!c.is_zero())
        for (unsigned t = 0; t <= static_cast<unsigned>(k); ++t)
          residual[t] -= c * P[k][t];
    }
    M[j] = std::move(coeffs);
  }
  return M;
}

Rational trig_norm(unsigned b) {
  // x^(2b)/(2^(2b)(2b+1)!) normalization at a pinned index value b
  return Rational(1) / (Rational(2).pow(2 * b) * Rational::factorial(2 * b + 1));
}

struct TermKey {
  MultiIndex mono;
  uint32_t iplus, iminus;
  bool operator<(const TermKey& o) const {
    return std::tie(mono, iplus, iminus) < std::tie(o.mono, o.iplus, o.iminus);
  }
};

}  // namespace

ShiftedPoly shifted_coeff_expansion(Signature sig, unsigned N, unsigned a,
                                    CoeffTable& table) {
  return shifted_taylor(GridFunction::from_table(sig, table), 2 * N, a);
}

Approximant build_FN(Signature sig, unsigned N, unsigned a, CoeffTable& table) {
  ShiftedPoly sp = shifted_coeff_expansion(sig, N, a, table);
  unsigned n = sig.n;
  std::map<TermKey, PiPoly> acc;
  std::vector<std::vector<Rational>> M = mono_to_p_table(2 * N);

  for (const ShiftedPoly::Region& reg : sp.regions) {
    std::vector<size_t> ivars, cvars;
    for (size_t i = 0; i < n; ++i)
      (reg.mask & (1u << i) ? ivars : cvars).push_back(i);
    size_t r = ivars.size();

    // h(alpha_I) = q(alpha_I - a)
    Poly h = reg.poly;
    for (size_t v = 0; v < r; ++v) {
      Poly shift(r);
      std::vector<unsigned> e(r, 0);
      e[v] = 1;
      shift.add_monomial(e, PiPoly(Rational(1)));
      shift.add_monomial(std::vector<unsigned>(r, 0),
                         PiPoly(Rational(-static_cast<long>(a))));
      h = h.substitute(v, shift);
    }

    // base factors from the pinned coordinates
    Rational base(1);
    MultiIndex base_mono(n, 0);
    for (size_t k = 0; k < cvars.size(); ++k) {
      base *= trig_norm(reg.beta[k]);
      base_mono[cvars[k]] = 2 * reg.beta[k];
    }

    // expand h in the tensor p-basis
    std::map<std::vector<unsigned>, PiPoly> pbasis;  // kappa -> coefficient
    for (const auto& [e, c] : h.monomials()) {
      std::map<std::vector<unsigned>, Rational> cur;
      cur[std::vector<unsigned>(r, 0)] = Rational(1);
      for (size_t v = 0; v < r; ++v) {
        std::map<std::vector<unsigned>, Rational> next;
        for (const auto& [kv, kc] : cur)
          for (unsigned k = 0; k < M[e[v]].size(); ++k) {
            if (M[e[v]][k].is_zero()) continue;
            std::vector<unsigned> nk = kv;
            nk[v] = k;
            auto [it, fresh] = next.try_emplace(nk, Rational(0));
            it->second += kc * M[e[v]][k];
          }
        cur = std::move(next);
      }
      for (const auto& [kv, kc] : cur) {
        auto [it, fresh] = pbasis.try_emplace(kv, PiPoly());
        it->second += c * kc;
      }
    }

    // resum: per kappa, expand prod_{v in I} (FullSum_vk - FiniteSum_vk)
    for (const auto& [kappa, lambda] : pbasis) {
      for (uint32_t smask = 0; smask < (1u << r); ++smask) {
        // finite positions and their value grids
        std::vector<size_t> fin;
        for (size_t v = 0; v < r; ++v)
          if (!(smask & (1u << v))) fin.push_back(v);
        MultiIndex b(fin.size(), 0);
        for (;;) {
          Rational factor = (fin.size() % 2) ? Rational(-1) : Rational(1);
          MultiIndex mono = base_mono;
          uint32_t ip = 0, im = 0;
          for (size_t t = 0; t < fin.size(); ++t) {
            size_t v = fin[t];
            factor *= Rational(p_k(kappa[v], b[t])) * trig_norm(b[t]);
            mono[ivars[v]] += 2 * b[t];
          }
          for (size_t v = 0; v < r; ++v) {
            if (!(smask & (1u << v))) continue;
            unsigned k = kappa[v];
            size_t i = ivars[v];
            if (k % 2 == 0) {
              im |= 1u << i;
              mono[i] += k;
              factor /= Rational(2).pow(k);
            } else {
              ip |= 1u << i;
              mono[i] += k - 1;
              factor /= Rational(2).pow(k - 1);
            }
          }
          PiPoly contrib = lambda * (base * factor);
          if (!contrib.is_zero()) {
            TermKey key{mono, ip, im};
            auto [it, fresh] = acc.try_emplace(key, PiPoly());
            it->second += contrib;
            if (it->second.is_zero()) acc.erase(it);
          }
          if (fin.empty()) break;
          size_t idx = 0;
          while (idx < fin.size()) {
            if (++b[idx] < a) break;
            b[idx] = 0;
            ++idx;
          }
          if (idx == fin.size()) break;
        }
      }
    }
  }

  Approximant out;
  out.sig = sig;
  out.order = N;
  out.shift = a;
  out.normalizer = vgn(sig, table);
  for (auto& [key, coeff] : acc)
    out.terms.push_back({std::move(coeff), key.mono, key.iplus, key.iminus});
  return out;
}

Interval Approximant::eval(std::span<const Rational> x, mpfr_prec_t prec) const {
  if (x.size() != sig.n) throw std::invalid_argument("Approximant::eval arity");
  std::vector<Interval> ch, sh;
  for (const Rational& v : x) {
    Interval h = Interval::exact(v / Rational(2), prec);
    ch.push_back(h.cosh());
    sh.push_back(h.sinhc());
  }
  Interval sum(prec);
  for (const Term& t : terms) {
    Rational xm(1);
    for (size_t i = 0; i < x.size(); ++i)
      if (t.mono[i]) xm *= x[i].pow(t.mono[i]);
    Interval term = t.coeff.eval(prec) * Interval::exact(xm, prec);
    for (size_t i = 0; i < x.size(); ++i) {
      if (t.iplus & (1u << i)) term = term * ch[i];
      if (t.iminus & (1u << i)) term = term * sh[i];
    }
    sum = sum + term;
  }
  return sum / normalizer.eval(prec);
}

unsigned Approximant::trig_degree() const {
  unsigned d = 0;
  for (const Term& t : terms) {
    unsigned s = 0;
    for (size_t i = 0; i < t.mono.size(); ++i)
      if ((t.iplus | t.iminus) & (1u << i)) s += t.mono[i];
    d = std::max(d, s);
  }
  return d;
}

PiPoly Approximant::constant_mass() const {
  PiPoly s;
  for (const Term& t : terms)
    if (mi_sum(t.mono) == 0) s += t.coeff;
  return s;
}

// ---------------------------------------------------------------------------
// Derivative-bound statistic

namespace {

std::vector<MultiIndex> compositions(unsigned n, unsigned total) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (n > 0) rec(rec, 0, total);
  return out;
}

}  // namespace

DerivStatReport derivative_bound_stat(unsigned n, unsigned N, unsigned a,
                                      std::span<const unsigned> g_range,
                                      CoeffTable& table, mpfr_prec_t prec) {
  DerivStatReport rep;
  rep.n = n;
  rep.N = N;
  rep.a = a;
  std::vector<MultiIndex> ms;
  if (N == 0) {
    ms.push_back(MultiIndex(n, 0));
  } else {
    for (unsigned s : {2 * N - 1, 2 * N})
      for (MultiIndex& m : compositions(n, s)) ms.push_back(std::move(m));
  }
  for (unsigned g : g_range) {
    Signature sig{g, n};
    if (!sig.valid()) continue;
    GridFunction f = GridFunction::from_table(sig, table);
    Interval v = vgn(sig, table).eval(prec);
    Interval gj = jap(g, prec);
    DerivStat st;
    st.g = g;
    unsigned box = sig.degree() + 1;  // one-cell margin past the degree box
    // enumerate alpha with |alpha| <= box
    MultiIndex alpha(n, 0);
    auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
      if (pos == n) {
        for (const MultiIndex& m : ms) {
          bool ok = true;
          for (unsigned i = 0; i < n; ++i)
            if (m[i] > 0 && alpha[i] < a) {
              ok = false;
              break;
            }
          if (!ok) continue;
          PiPoly d = delta(f, m, alpha);
          Interval stat = d.eval(prec).abs();
          if (N > 0) {
            Rational s(static_cast<long>(mi_sum(alpha)));
            Interval aj = Interval::exact(Rational(1) + s * s, prec).sqrt();
            stat = stat * gj.pow(N) / (aj.pow(N) * v);
          } else {
            stat = stat / v;
          }
          double mid = stat.mid();
          if (st.empty || mid > st.sup) {
            st.sup = mid;
            st.arg_m = m;
            st.arg_alpha = alpha;
          }
          st.empty = false;
        }
        return;
      }
      for (unsigned val = 0; val <= left; ++val) {
        alpha[pos] = val;
        self(self, pos + 1, left - val);
      }
    };
    rec(rec, 0, box);
    rep.per_g.push_back(std::move(st));
  }
  // anchor the trend at the first genus whose admissible set is nonempty
  // and meets the coefficient support (a sup of exactly zero means the
  // threshold a only reaches the zero extension of the degree box)
  bool have_base = false;
  for (const DerivStat& st : rep.per_g) {
    if (st.empty || (!have_base && st.sup == 0.0)) continue;
    if (!have_base) {
      rep.base_sup = st.sup;
      rep.max_sup = st.sup;
      have_base = true;
      continue;
    }
    rep.max_sup = std::max(rep.max_sup, st.sup);
  }
  if (!have_base)
    rep.bounded_trend = false;
  else
    rep.bounded_trend = rep.max_sup <= 2.0 * rep.base_sup + 1e-12;
  return rep;
}

}  // namespace wpvol
