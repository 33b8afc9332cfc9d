#include "wpvol/checks.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "wpvol/asymptotics.hpp"
#include "wpvol/recursion.hpp"
#include "wpvol/store.hpp"
#include "wpvol/zeta.hpp"

namespace wpvol::checks {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

/// Decides a < b with adaptive precision; both sides supplied as
/// enclosure-producing functions. Returns false only when b < a is certain;
/// throws undecided_error at the ceiling.
bool decide_less(const std::function<Interval(mpfr_prec_t)>& a,
                 const std::function<Interval(mpfr_prec_t)>& b) {
  for (mpfr_prec_t prec = 64; prec <= kCompareCeiling; prec *= 2) {
    Interval ia = a(prec), ib = b(prec);
    if (ia.certainly_less(ib)) return true;
    if (ib.certainly_less(ia)) return false;
  }
  throw undecided_error(kCompareCeiling);
}

struct Trend {
  double base = 0.0, max = 0.0;
  bool have = false;
  unsigned skipped = 0;
  void feed(double v) {
    if (!have) {
      base = max = v;
      have = true;
    } else {
      max = std::max(max, v);
    }
  }
  /// For statistics whose defining sum can be structurally empty at small
  /// genus: anchor at the first non-degenerate value.
  void feed_or_skip(double v, bool degenerate) {
    if (degenerate && !have) {
      ++skipped;
      return;
    }
    feed(v);
  }
  bool bounded() const { return have && max <= 2.0 * base + 1e-12; }
  std::string detail() const {
    std::string s = "base=" + fmt(base) + " max=" + fmt(max);
    if (skipped) s += " (" + std::to_string(skipped) + " empty skipped)";
    return s;
  }
};

Interval exp_half_l1(std::span<const Rational> x, mpfr_prec_t prec) {
  return Interval::exact(l1(x) / Rational(2), prec).exp();
}

uint64_t mix(uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

/// Deterministic pseudo-random rational in [-100, 100].
Rational hash_rational(uint64_t seed, const MultiIndex& alpha) {
  uint64_t h = mix(seed ^ 0x9e3779b97f4a7c15ULL);
  for (unsigned v : alpha) h = mix(h ^ (v + 0x165667b19e3779f9ULL));
  long num = static_cast<long>(h % 201) - 100;
  long den = static_cast<long>(mix(h) % 20) + 1;
  return Rational(num, den);
}

}  // namespace

std::vector<Rational> geometric_axis() {
  return {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(4),
          Rational(8)};
}

std::vector<std::vector<Rational>> grid(unsigned n, bool include_zero) {
  std::vector<Rational> axis = geometric_axis();
  std::vector<std::vector<Rational>> out;
  std::vector<size_t> idx(n, 0);
  for (;;) {
    std::vector<Rational> x;
    for (size_t i = 0; i < n; ++i) x.push_back(axis[idx[i]]);
    out.push_back(std::move(x));
    size_t p = 0;
    while (p < n) {
      if (++idx[p] < axis.size()) break;
      idx[p] = 0;
      ++p;
    }
    if (p == n) break;
  }
  if (include_zero) out.push_back(std::vector<Rational>(n, Rational(0)));
  return out;
}

// --------------------------------------------------------------- criterion 1

Report base_values(CoeffTable& table) {
  Report rep{"exact base and derived values", {}};
  bool paper = table.convention() == Convention::paper;

  VolumePolynomial v03 = volume_poly(Signature{0, 3}, table);
  rep.lines.push_back({"V_{0,3} = 1",
                       v03.coeffs.size() == 1 &&
                           v03.coeffs.at({0, 0, 0}) == PiPoly(Rational(1)),
                       "constant polynomial"});

  VolumePolynomial v11 = volume_poly(Signature{1, 1}, table);
  PiPoly want0 = PiPoly::monomial(1, Rational(1, paper ? 6 : 12));
  PiPoly want1 = PiPoly(paper ? Rational(1) : Rational(1, 2));
  rep.lines.push_back({"V_{1,1} = pi^2/6 + x^2/24",
                       v11.coeffs.size() == 2 && v11.coeffs.at({0}) == want0 &&
                           v11.coeffs.at({1}) == want1,
                       std::string("convention=") + convention_name(table.convention())});

  VolumePolynomial v04 = volume_poly(Signature{0, 4}, table);
  rep.lines.push_back(
      {"V_{0,4} = 2 pi^2 + (1/2) sum x_i^2",
       v04.coeffs.size() == 2 &&
           v04.coeffs.at({0, 0, 0, 0}) == PiPoly::monomial(1, Rational(2)) &&
           v04.coeffs.at({1, 0, 0, 0}) == PiPoly(Rational(12)),
       "c(0)=2 pi^2, c(1,0,0,0)=12"});

  PiPoly c12 = coeff(Signature{1, 2}, {0, 0}, table);
  rep.lines.push_back({"c_{1,2}(0,0) = pi^4/4",
                       c12 == PiPoly::monomial(2, Rational(1, 4)),
                       "hand value pi^4/4; got " + c12.pretty()});
  return rep;
}

// --------------------------------------------------------------- criterion 2

Report structural(CoeffTable& table, const Config& cfg) {
  Report rep{"structural invariants (exact)", {}};
  uint64_t checked = 0, homog_bad = 0, mono_bad = 0, bound_bad = 0;
  std::string first_bad;

  table.for_each([&](Signature sig, const MultiIndex& key, const PiPoly& val) {
    ++checked;
    unsigned want = sig.degree() - mi_sum(key);
    bool ok = val.is_monomial() && val.degree() == want &&
              val.terms().begin()->second.sign() > 0;
    if (!ok) {
      ++homog_bad;
      if (first_bad.empty())
        first_bad = "homogeneity at g=" + std::to_string(sig.g) +
                    " n=" + std::to_string(sig.n);
    }
  });
  rep.lines.push_back({"homogeneity and positivity of every coefficient",
                       homog_bad == 0,
                       std::to_string(checked) + " entries" +
                           (first_bad.empty() ? "" : "; " + first_bad)});

  // monotone decrease in alpha and 0 <= c <= V, on every stored key
  for (Signature sig : table.signatures()) {
    const PiPoly* v = table.find(sig, MultiIndex(sig.n, 0));
    for (const MultiIndex& key : sorted_keys(sig.n, sig.degree())) {
      const PiPoly* c = table.find(sig, key);
      if (!c) continue;
      if (compare(*c, *v) == Order::greater) ++bound_bad;
      for (unsigned i = 0; i < sig.n; ++i) {
        MultiIndex up = key;
        ++up[i];
        PiPoly cu;
        if (mi_sum(up) <= sig.degree()) cu = *table.find(sig, sorted_desc(up));
        if (compare(cu, *c) == Order::greater) ++mono_bad;
      }
    }
  }
  rep.lines.push_back({"entrywise monotone decrease in alpha", mono_bad == 0,
                       mono_bad ? std::to_string(mono_bad) + " violations" : ""});
  rep.lines.push_back({"0 <= c <= V_{g,n}", bound_bad == 0,
                       bound_bad ? std::to_string(bound_bad) + " violations" : ""});

  // permutation symmetry through the recursion itself: re-derive each key
  // with every distinct entry moved into the first slot
  uint64_t sym_checked = 0, sym_bad = 0;
  for (Signature sig : table.signatures()) {
    if (sig.chi() < 2 || sig.n < 2) continue;
    bool desk = sig.chi() <= cfg.chi_max && sig.n <= cfg.n_max;
    if (!desk && sig.n != 2) continue;  // n = 2 extension tables are cheap
    if (!table.complete(sig)) continue;
    for (const MultiIndex& key : sorted_keys(sig.n, sig.degree())) {
      const PiPoly* stored = table.find(sig, key);
      MultiIndex values = key;
      values.erase(std::unique(values.begin(), values.end()), values.end());
      for (unsigned lead : values) {
        MultiIndex perm;
        perm.push_back(lead);
        bool used = false;
        for (unsigned v : key) {
          if (!used && v == lead) {
            used = true;
            continue;
          }
          perm.push_back(v);
        }
        ++sym_checked;
        if (coeff_raw_ordered(sig, perm, table) != *stored) ++sym_bad;
      }
    }
  }
  rep.lines.push_back({"permutation symmetry (recursion re-derivation)",
                       sym_bad == 0,
                       std::to_string(sym_checked) + " rederivations" +
                           (sym_bad ? ", " + std::to_string(sym_bad) + " bad" : "")});
  return rep;
}

// --------------------------------------------------------------- criterion 3

Report cusp_bounds(CoeffTable& table, const Config& cfg) {
  Report rep{"adding-a-cusp ratio bounds (strict, adaptive intervals)", {}};
  // lower endpoint (1/12)(1 - pi^2/10) lives in Q[pi^2]
  PiPoly low;
  low += PiPoly(Rational(1, 12));
  low += PiPoly::monomial(1, Rational(-1, 120));
  auto high = [](mpfr_prec_t prec) {
    Interval pi = Interval::pi(prec);
    return (pi * pi.cosh() - pi.sinh()) / (Interval::exact(2, prec) * pi * pi);
  };

  unsigned pairs = 0, bad = 0;
  std::string detail;
  (void)cfg;
  for (Signature sig : table.signatures()) {
    Signature up{sig.g, sig.n + 1};
    if (!table.complete(sig) || !table.complete(up)) continue;
    PiPoly num = vgn(sig, table) * Rational(static_cast<long>(sig.chi()));
    PiPoly den = vgn(up, table);
    ++pairs;
    auto ratio = [&](mpfr_prec_t prec) { return num.eval(prec) / den.eval(prec); };
    bool ok_low = decide_less([&](mpfr_prec_t p) { return low.eval(p); }, ratio);
    bool ok_high = decide_less(ratio, high);
    if (!ok_low || !ok_high) {
      ++bad;
      if (detail.empty())
        detail = "violated at g=" + std::to_string(sig.g) +
                 " n=" + std::to_string(sig.n);
    }
  }
  rep.lines.push_back({"(2g-2+n) V_{g,n} / V_{g,n+1} inside the strict bounds",
                       bad == 0 && pairs > 0,
                       std::to_string(pairs) + " pairs" +
                           (detail.empty() ? "" : "; " + detail)});
  return rep;
}

// --------------------------------------------------------------- criterion 4

Report u_sequence() {
  Report rep{"u-sequence behaviour", {}};
  const unsigned I = 30;
  bool increasing = true, below_one = true;
  for (unsigned i = 0; i <= I; ++i) {
    if (compare(u_weight(i), u_weight(i + 1)) != Order::less) increasing = false;
    if (compare(u_weight(i), PiPoly(Rational(1))) != Order::less) below_one = false;
  }
  rep.lines.push_back({"u_i strictly increasing (i <= 30)", increasing, ""});
  rep.lines.push_back({"u_i < 1 (i <= 30)", below_one, ""});

  std::vector<PiPoly> e;
  for (unsigned i = 0; i <= I; ++i) {
    PiPoly d = u_weight(i + 1) - u_weight(i);
    e.push_back(d * Rational(4).pow(i));
  }
  size_t argmax5 = 0;
  for (size_t i = 1; i <= 5; ++i)
    if (compare(e[i], e[argmax5]) == Order::greater) argmax5 = i;
  bool bounded = true;
  size_t first_violation = 0;
  for (size_t i = 0; i <= I; ++i)
    if (compare(e[i], e[argmax5]) == Order::greater) {
      bounded = false;
      first_violation = i;
      break;
    }
  std::string detail =
      "max_{i<=5} = e_" + std::to_string(argmax5) + " = " + fmt(e[argmax5].eval(128).mid()) +
      ", e_30 = " + fmt(e[I].eval(128).mid());
  if (!bounded)
    detail += "; exceeded first at i=" + std::to_string(first_violation) +
              " (the sequence increases towards 3/4)";
  rep.lines.push_back(
      {"4^i (u_{i+1} - u_i) bounded by its max over i <= 5", bounded, detail});

  // measured replacement: the statistic stays strictly below 3/4
  bool below34 = true;
  for (size_t i = 0; i <= I; ++i)
    if (compare(e[i], PiPoly(Rational(3, 4))) != Order::less) below34 = false;
  rep.lines.push_back(
      {"[measured] 4^i (u_{i+1} - u_i) < 3/4 (i <= 30)", below34,
       "sup approached from below; C = 3/4 works in the speed bound"});
  return rep;
}

// --------------------------------------------------------------- criterion 5

Report discrete_identities(uint64_t seed) {
  Report rep{"discrete difference identities (exact)", {}};

  // synthetic functions: deterministic pseudo-random rationals
  auto synthetic = [seed](size_t arity, uint64_t salt) {
    GridFunction f;
    f.arity = arity;
    f.eval = [seed, salt](const MultiIndex& alpha) {
      return PiPoly(hash_rational(seed ^ salt, alpha));
    };
    return f;
  };

  uint64_t n_checks = 0, n_bad = 0;
  for (unsigned arity = 1; arity <= 3; ++arity) {
    GridFunction f = synthetic(arity, arity);
    unsigned box = arity == 3 ? 4 : 6;
    MultiIndex alpha(arity, 0);
    auto rec = [&](auto&& self, unsigned pos) -> void {
      if (pos == arity) {
        auto [lhs, rhs] = discrete_integral_sides(f, alpha);
        ++n_checks;
        if (lhs != rhs) ++n_bad;
        return;
      }
      for (unsigned v = 0; v <= box; ++v) {
        alpha[pos] = v;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
  }
  // randomized instances
  for (unsigned t = 0; t < 100; ++t) {
    unsigned arity = 1 + static_cast<unsigned>(mix(seed + t) % 3);
    GridFunction f = synthetic(arity, 1000 + t);
    MultiIndex alpha(arity);
    for (unsigned i = 0; i < arity; ++i)
      alpha[i] = static_cast<unsigned>(mix(seed + 31 * t + i) % 9);
    auto [lhs, rhs] = discrete_integral_sides(f, alpha);
    ++n_checks;
    if (lhs != rhs) ++n_bad;
  }
  rep.lines.push_back({"discrete integration identity", n_bad == 0,
                       std::to_string(n_checks) + " instances"});

  // convolution-derivative identity on exhaustive boxes and random arrays
  uint64_t c_checks = 0, c_bad = 0;
  auto run_conv = [&](const std::vector<std::vector<PiPoly>>& c) {
    for (unsigned m = 1; m <= 3; ++m)
      for (unsigned k = 0; k <= 8; ++k) {
        auto [lhs, rhs] = conv_derivative_sides(c, m, k);
        ++c_checks;
        if (lhs != rhs) ++c_bad;
      }
  };
  {
    std::vector<std::vector<PiPoly>> c(6, std::vector<PiPoly>(6));
    for (unsigned i = 0; i < 6; ++i)
      for (unsigned j = 0; j < 6; ++j)
        c[i][j] = PiPoly(hash_rational(seed ^ 777, {i, j}));
    run_conv(c);
  }
  for (unsigned t = 0; t < 100; ++t) {
    std::vector<std::vector<PiPoly>> c(5, std::vector<PiPoly>(5));
    for (unsigned i = 0; i < 5; ++i)
      for (unsigned j = 0; j < 5; ++j)
        c[i][j] = PiPoly(hash_rational(seed + 5000 + t, {i, j}));
    unsigned m = 1 + static_cast<unsigned>(mix(seed + t) % 3);
    unsigned k = static_cast<unsigned>(mix(seed + 2 * t) % 9);
    auto [lhs, rhs] = conv_derivative_sides(c, m, k);
    ++c_checks;
    if (lhs != rhs) ++c_bad;
  }
  // engine-backed instance: products of coefficients as in the separating
  // term of the recursion
  {
    CoeffTable t(Convention::half);
    Signature s12{1, 2};
    PiPoly dummy = coeff(s12, {0, 0}, t);
    (void)dummy;
    std::vector<std::vector<PiPoly>> c(4, std::vector<PiPoly>(4));
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = 0; j < 4; ++j)
        c[i][j] = coeff(Signature{1, 1}, {i}, t) * coeff(Signature{1, 1}, {j}, t);
    run_conv(c);
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = 0; j < 4; ++j) c[i][j] = coeff(s12, {i, j}, t);
    run_conv(c);
  }
  rep.lines.push_back({"convolution-derivative identity", c_bad == 0,
                       std::to_string(c_checks) + " instances"});
  return rep;
}

// --------------------------------------------------------------- criterion 6

Report residual_first_order(CoeffTable& table, const Config& cfg) {
  Report rep{"first-order residual trend", {}};
  for (unsigned n : {1u, 2u}) {
    Trend trend;
    bool finite = true;
    auto pts = grid(n, false);
    for (unsigned g = cfg.g_min; g <= cfg.g_max; ++g) {
      Signature sig{g, n};
      Interval v = vgn(sig, table).eval(cfg.prec);
      double sup = 0;
      for (const auto& x : pts) {
        Interval ratio = eval_volume_exact(sig, x, table).eval(cfg.prec) / v;
        Interval r0 = (ratio - F0(x, cfg.prec)).abs() * jap(g, cfg.prec) /
                      (Interval::exact(l1(x), cfg.prec) * exp_half_l1(x, cfg.prec));
        double m = r0.mid();
        if (!std::isfinite(m)) finite = false;
        sup = std::max(sup, m);
      }
      trend.feed(sup);
    }
    rep.lines.push_back({"R0 finite on the grid (n=" + std::to_string(n) + ")",
                         finite, ""});
    rep.lines.push_back({"max_g sup_x R0 <= 2 R0(g_min) (n=" + std::to_string(n) + ")",
                         trend.bounded(), trend.detail()});
    // at x = 0 the ratio is exactly 1
    Signature sig{cfg.g_min, n};
    std::vector<Rational> zero(n, Rational(0));
    bool exact1 = eval_volume_exact(sig, zero, table) == vgn(sig, table);
    rep.lines.push_back({"V(0)/V = 1 exactly (n=" + std::to_string(n) + ")", exact1, ""});
  }
  return rep;
}

// --------------------------------------------------------------- criterion 7

Report residual_second_order(CoeffTable& table, const Config& cfg) {
  Report rep{"second-order residual trend and f1 convergence", {}};
  for (unsigned n : {1u, 2u}) {
    Trend trend;
    auto pts = grid(n, false);
    for (unsigned g = cfg.g_min; g <= cfg.g_max; ++g) {
      Signature sig{g, n};
      Interval v = vgn(sig, table).eval(cfg.prec);
      double sup = 0;
      for (const auto& x : pts) {
        Interval ratio = eval_volume_exact(sig, x, table).eval(cfg.prec) / v;
        Interval r1 = (ratio - F1(sig, x, table, cfg.prec)).abs() *
                      jap(g, cfg.prec).pow(2) /
                      (jap(x, cfg.prec).pow(3) * exp_half_l1(x, cfg.prec));
        sup = std::max(sup, r1.mid());
      }
      trend.feed(sup);
    }
    rep.lines.push_back({"max_g sup_x R1 <= 2 R1(g_min) (n=" + std::to_string(n) + ")",
                         trend.bounded(), trend.detail()});
  }
  // |g (ratio - F0) - f1| at n=1, x=(2) strictly decreasing from g=4 to 12
  {
    std::vector<Rational> x{Rational(2)};
    Interval f1v = f1(x, cfg.prec);
    double prev = 0;
    bool decreasing = true;
    std::string vals;
    for (unsigned g = 4; g <= cfg.g_max_f1; ++g) {
      Signature sig{g, 1};
      Interval ratio = eval_volume_exact(sig, x, table).eval(cfg.prec) /
                       vgn(sig, table).eval(cfg.prec);
      Interval d =
          (Interval::exact(static_cast<long>(g), cfg.prec) * (ratio - F0(x, cfg.prec)) -
           f1v)
              .abs();
      double m = d.mid();
      if (g > 4 && !(m < prev)) decreasing = false;
      if (!vals.empty()) vals += " ";
      vals += fmt(m);
      prev = m;
    }
    rep.lines.push_back(
        {"|g (V(x)/V - F0) - f1| strictly decreasing, n=1, x=2, g=4..12",
         decreasing, vals});
  }
  return rep;
}

// --------------------------------------------------------------- criterion 8

Report constructive_approximant(CoeffTable& table, const Config& cfg) {
  Report rep{"constructive order-N approximant", {}};
  unsigned N = cfg.order;
  unsigned a = 2 * N + 2;

  bool exact_below = true, mass_ok = true, deg_ok = true, shape_ok = true,
       eval_one = true;
  for (unsigned n : {1u, 2u}) {
    for (unsigned g : {cfg.g_min, cfg.g_min + 1}) {
      Signature sig{g, n};
      ShiftedPoly sp = shifted_coeff_expansion(sig, N, a, table);
      GridFunction f = GridFunction::from_table(sig, table);
      MultiIndex alpha(n, 0);
      auto rec = [&](auto&& self, unsigned pos) -> void {
        if (pos == n) {
          if (sp.eval(alpha) != f.eval(alpha)) exact_below = false;
          return;
        }
        for (unsigned v = 0; v < a; ++v) {
          alpha[pos] = v;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    }
    for (unsigned g = cfg.g_min; g <= cfg.g_max; ++g) {
      Signature sig{g, n};
      Approximant ap = build_FN(sig, N, a, table);
      if (ap.constant_mass() != vgn(sig, table)) mass_ok = false;
      if (ap.trig_degree() > 2 * N) deg_ok = false;
      for (const auto& t : ap.terms) {
        if (t.iplus & t.iminus) shape_ok = false;
        for (unsigned e : t.mono)
          if (e % 2) shape_ok = false;
      }
      std::vector<Rational> zero(n, Rational(0));
      Interval at0 = ap.eval(zero, cfg.prec);
      if (std::abs(at0.mid() - 1.0) > 1e-30) eval_one = false;
    }
  }
  rep.lines.push_back({"reproduces c exactly on |alpha|_inf < a", exact_below,
                       "a = " + std::to_string(a)});
  rep.lines.push_back({"evaluates to 1 at x = 0 (and x-free mass = V)",
                       mass_ok && eval_one, ""});
  rep.lines.push_back({"polynomial degree on cosh/sinhc variables <= 2N",
                       deg_ok, ""});
  rep.lines.push_back({"even monomials, disjoint index sets", shape_ok, ""});

  for (unsigned n : {1u, 2u}) {
    Trend trend;
    auto pts = grid(n, false);
    for (unsigned g = cfg.g_min; g <= cfg.g_max; ++g) {
      Signature sig{g, n};
      Approximant ap = build_FN(sig, N, a, table);
      Interval v = vgn(sig, table).eval(cfg.prec);
      double sup = 0;
      for (const auto& x : pts) {
        Interval ratio = eval_volume_exact(sig, x, table).eval(cfg.prec) / v;
        Interval rn = (ratio - ap.eval(x, cfg.prec)).abs() *
                      jap(g, cfg.prec).pow(N + 1) /
                      (jap(x, cfg.prec).pow(3 * N + 1) * exp_half_l1(x, cfg.prec));
        sup = std::max(sup, rn.mid());
      }
      trend.feed(sup);
    }
    rep.lines.push_back({"max_g sup_x RN <= 2 RN(g_min) (n=" + std::to_string(n) + ")",
                         trend.bounded(), trend.detail()});
  }
  return rep;
}

// --------------------------------------------------------------- criterion 9

Report derivative_bounds(CoeffTable& table, const Config& cfg) {
  Report rep{"discrete-derivative bound statistic", {}};
  std::vector<unsigned> gs;
  for (unsigned g = cfg.g_min; g <= cfg.g_max; ++g) gs.push_back(g);

  // N = 0: the statistic is c(alpha)/V <= 1, checked exactly elsewhere;
  // measured sup must be exactly 1 (attained at alpha = 0)
  bool n0_ok = true;
  for (unsigned n : {1u, 2u}) {
    DerivStatReport r = derivative_bound_stat(n, 0, 0, gs, table, cfg.prec);
    for (const DerivStat& st : r.per_g)
      if (st.empty || std::abs(st.sup - 1.0) > 1e-30) n0_ok = false;
  }
  rep.lines.push_back({"N=0 statistic equals 1 (c <= V)", n0_ok, ""});

  for (unsigned N : {1u, 2u})
    for (unsigned a : {2 * N, 2 * N + 2, 2 * N + 4})
      for (unsigned n : {1u, 2u}) {
        DerivStatReport r = derivative_bound_stat(n, N, a, gs, table, cfg.prec);
        std::string name = "bounded trend N=" + std::to_string(N) +
                           " a=" + std::to_string(a) + " n=" + std::to_string(n);
        std::string detail = "per-g sup:";
        for (const DerivStat& st : r.per_g)
          detail += st.empty ? " -" : " " + fmt(st.sup);
        rep.lines.push_back({name, r.bounded_trend, detail});
      }
  return rep;
}

// -------------------------------------------------------------- criterion 10

Report cut_sums(CoeffTable& table, const Config& cfg) {
  Report rep{"cut-sum bounds", {}};
  for (unsigned n : {1u, 2u})
    for (unsigned n1 = 0; n1 <= n; ++n1)
      for (unsigned N1 = 0; N1 <= 2; ++N1)
        for (unsigned N2 = 0; N2 <= 2; ++N2) {
          unsigned n2 = n - n1;
          Trend trend;
          for (unsigned g = cfg.g_min; g <= cfg.g_max; ++g) {
            Interval sum(cfg.prec);
            unsigned terms = 0;
            for (unsigned g1 = 0; g1 <= g; ++g1) {
              unsigned g2 = g - g1;
              if (2 * g1 + n1 <= N1 + 1 || 2 * g2 + n2 <= N2 + 1) continue;
              Interval term =
                  vgn(Signature{g1, n1 + 1}, table).eval(cfg.prec) *
                  vgn(Signature{g2, n2 + 1}, table).eval(cfg.prec) /
                  (jap(g1, cfg.prec).pow(N1) * jap(g2, cfg.prec).pow(N2));
              sum = sum + term;
              ++terms;
            }
            Interval stat = sum * jap(g, cfg.prec).pow(N1 + N2 + 1) /
                            vgn(Signature{g, n}, table).eval(cfg.prec);
            trend.feed_or_skip(stat.mid(), terms == 0);
          }
          std::string name = "n=" + std::to_string(n) + " split " +
                             std::to_string(n1) + "+" + std::to_string(n2) +
                             " N=(" + std::to_string(N1) + "," +
                             std::to_string(N2) + ")";
          rep.lines.push_back({name, trend.bounded(), trend.detail()});
        }
  return rep;
}

// -------------------------------------------------------------- criterion 11

Report persistence(CoeffTable& table, const std::filesystem::path& dir) {
  Report rep{"persistence round-trip and integrity", {}};
  std::filesystem::create_directories(dir);

  std::filesystem::path p1 = dir / "cache_a.txt";
  std::filesystem::path p2 = dir / "cache_b.txt";
  save_cache(table, p1);
  CoeffTable loaded = load_cache(p1, table.convention());
  save_cache(loaded, p2);
  std::ifstream f1s(p1, std::ios::binary), f2s(p2, std::ios::binary);
  std::stringstream b1, b2;
  b1 << f1s.rdbuf();
  b2 << f2s.rdbuf();
  rep.lines.push_back({"save(load(f)) byte-identical", b1.str() == b2.str(),
                       std::to_string(b1.str().size()) + " bytes"});

  uint64_t before = loaded.computed_count();
  std::vector<Signature> targets = loaded.signatures();
  fill(loaded, targets, 1);
  rep.lines.push_back({"warm rerun performs zero recomputations",
                       loaded.computed_count() == before,
                       std::to_string(loaded.computed_count() - before) +
                           " recomputed"});

  // single-byte corruption must be rejected (small cache, every position)
  CoeffTable small(table.convention());
  std::vector<Signature> small_targets = signatures_upto(3, 4);
  fill(small, small_targets, 1);
  std::string bytes = serialize_cache(small);
  std::filesystem::path pc = dir / "cache_corrupt.txt";
  size_t undetected = 0;
  for (size_t pos = 0; pos < bytes.size(); ++pos) {
    std::string mutated = bytes;
    mutated[pos] = static_cast<char>(mutated[pos] ^ 0x01);
    {
      std::ofstream out(pc, std::ios::binary | std::ios::trunc);
      out << mutated;
    }
    try {
      (void)load_cache(pc, table.convention());
      ++undetected;
    } catch (const std::exception&) {
      // rejected, as required
    }
  }
  rep.lines.push_back({"every single-byte corruption rejected", undetected == 0,
                       std::to_string(bytes.size()) + " positions" +
                           (undetected ? ", " + std::to_string(undetected) +
                                             " slipped through"
                                       : "")});
  return rep;
}

// -------------------------------------------------------------- criterion 12

Report pk_closed_forms(const Config& cfg) {
  Report rep{"p_k generating-sum closed forms", {}};
  std::vector<Rational> xs = geometric_axis();
  xs.push_back(Rational(10));
  double worst = 0;
  bool ok = true;
  for (unsigned k = 0; k <= 8; ++k)
    for (const Rational& x : xs) {
      Interval diff = (pk_generating_sum(k, x, 60, cfg.prec) -
                       pk_closed_form(k, x, cfg.prec))
                          .abs();
      double hi = diff.hi_d();
      worst = std::max(worst, hi);
      if (!(hi < 1e-25)) ok = false;
    }
  rep.lines.push_back({"truncated sums match closed forms within 1e-25 (T=60)",
                       ok, "worst |diff| = " + fmt(worst)});
  return rep;
}

// ------------------------------------------------------------- extra suites

Report same_euler_trend(CoeffTable& table, const Config& cfg) {
  Report rep{"same-Euler-characteristic ratio", {}};
  for (unsigned n : {1u, 2u, 3u}) {
    Trend trend;
    for (unsigned g = cfg.g_min; g <= cfg.g_max; ++g) {
      Signature a{g, n}, b{g - 1, n + 2};
      Interval ratio = vgn(b, table).eval(cfg.prec) / vgn(a, table).eval(cfg.prec);
      Interval stat = (ratio - Interval::exact(1, cfg.prec)).abs() * jap(g, cfg.prec);
      trend.feed(stat.mid());
    }
    rep.lines.push_back({"|V_{g-1,n+2}/V_{g,n} - 1| <g> bounded (n=" +
                             std::to_string(n) + ")",
                         trend.bounded(), trend.detail()});
  }
  return rep;
}

Report model_trends(CoeffTable& table, const Config& cfg) {
  Report rep{"second-order coefficient models", {}};
  for (unsigned n : {1u, 2u}) {
    Trend tpsi, tchat;
    for (unsigned g = cfg.g_min; g <= cfg.g_max; ++g) {
      Signature sig{g, n};
      GridFunction f = GridFunction::from_table(sig, table);
      Interval v = vgn(sig, table).eval(cfg.prec);
      Interval g2 = jap(g, cfg.prec).pow(2);
      double sup_psi = 0, sup_chat = 0;
      MultiIndex m1(n, 0);
      m1[0] = 1;
      MultiIndex alpha(n, 0);
      auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
        if (pos == n) {
          unsigned s = mi_sum(alpha);
          {
            PiPoly diff = delta(f, m1, alpha) - psi1(sig, alpha, table);
            Rational ss(static_cast<long>(s));
            Interval aj = Interval::exact(Rational(1) + ss * ss, cfg.prec).sqrt();
            Interval stat = diff.eval(cfg.prec).abs() * g2 / (aj.pow(3) * v);
            sup_psi = std::max(sup_psi, stat.mid());
          }
          if (s >= 1) {
            PiPoly diff = f.eval(alpha) - c_hat1(sig, alpha, table);
            Interval a4 =
                Interval::exact(Rational(static_cast<long>(s)).pow(4), cfg.prec);
            Interval stat = diff.eval(cfg.prec).abs() * g2 / (a4 * v);
            sup_chat = std::max(sup_chat, stat.mid());
          }
          return;
        }
        for (unsigned val = 0; val <= left; ++val) {
          alpha[pos] = val;
          self(self, pos + 1, left - val);
        }
      };
      rec(rec, 0, sig.degree() + 1);
      tpsi.feed(sup_psi);
      tchat.feed(sup_chat);
    }
    rep.lines.push_back({"delta_1 c vs psi model bounded (n=" + std::to_string(n) + ")",
                         tpsi.bounded(), tpsi.detail()});
    rep.lines.push_back({"c vs second-order model bounded (n=" + std::to_string(n) + ")",
                         tchat.bounded(), tchat.detail()});
  }
  return rep;
}

void print_report(const Report& rep, bool verbose) {
  std::printf("== %s ==\n", rep.title.c_str());
  for (const Line& l : rep.lines) {
    if (verbose || !l.pass)
      std::printf("  [%s] %s%s%s\n", l.pass ? "PASS" : "FAIL", l.name.c_str(),
                  l.detail.empty() ? "" : " -- ", l.detail.c_str());
  }
}

}  // namespace wpvol::checks
