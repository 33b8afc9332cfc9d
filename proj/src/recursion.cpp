#include "wpvol/recursion.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include "wpvol/zeta.hpp"

namespace wpvol {

namespace {

Rational half() { return Rational(1, 2); }

/// Base tables at |chi| = 1, in the reporting convention.
void seed_base(CoeffTable& t) {
  Signature s03{0, 3};
  if (!t.complete(s03)) {
    t.insert(s03, MultiIndex{0, 0, 0}, PiPoly(Rational(1)));
    t.mark_complete(s03);
  }
  Signature s11{1, 1};
  if (!t.complete(s11)) {
    bool paper = t.convention() == Convention::paper;
    Rational c0(1, paper ? 6 : 12);  // pi^2 coefficient
    Rational c1 = paper ? Rational(1) : half();
    t.insert(s11, MultiIndex{0}, PiPoly::monomial(1, c0));
    t.insert(s11, MultiIndex{1}, PiPoly(c1));
    t.mark_complete(s11);
  }
}

/// Coefficient lookup as the recursion consumes it: zero outside the degree
/// box, and (1,1) values taken with the elliptic-involution weight so that
/// the recursion is exactly symmetric under either reporting convention.
PiPoly rec_value(Signature sig, MultiIndex sorted_key, const CoeffTable& t) {
  if (mi_sum(sorted_key) > sig.degree()) return PiPoly();
  const PiPoly* p = t.find(sig, sorted_key);
  if (!p)
    throw std::logic_error("coefficient table incomplete; run fill first");
  if (sig.g == 1 && sig.n == 1 && t.convention() == Convention::paper)
    return *p * half();
  return *p;
}

/// rec_value over the full polynomial of `sig` in the first index, with the
/// remaining indices fixed: out[k] = c_sig(k, rest...).
std::vector<PiPoly> first_index_profile(Signature sig, const MultiIndex& rest,
                                        const CoeffTable& t) {
  unsigned rest_sum = mi_sum(rest);
  std::vector<PiPoly> out;
  if (rest_sum > sig.degree()) return out;
  unsigned kmax = sig.degree() - rest_sum;
  out.reserve(kmax + 1);
  MultiIndex key(sig.n);
  for (unsigned k = 0; k <= kmax; ++k) {
    std::copy(rest.begin(), rest.end(), key.begin());
    key[rest.size()] = k;
    std::sort(key.begin(), key.end(), std::greater<>());
    out.push_back(rec_value(sig, key, t));
  }
  return out;
}

struct ValueCount {
  unsigned value;
  unsigned count;
};

std::vector<ValueCount> tally(const MultiIndex& tail) {
  std::vector<ValueCount> vc;
  for (unsigned v : tail) {
    auto it = std::find_if(vc.begin(), vc.end(),
                           [v](const ValueCount& x) { return x.value == v; });
    if (it == vc.end())
      vc.push_back({v, 1});
    else
      ++it->count;
  }
  return vc;
}

}  // namespace

PiPoly term_A(Signature sig, const MultiIndex& alpha, unsigned j, CoeffTable& table) {
  if (sig.n < 2 || j < 2 || j > sig.n)
    throw std::invalid_argument("term_A: need n >= 2 and j in {2..n}");
  Signature inner{sig.g, sig.n - 1};
  if (!inner.valid()) return PiPoly();
  unsigned a1 = alpha[0];
  unsigned aj = alpha[j - 1];
  MultiIndex rest;
  rest.reserve(sig.n - 2);
  for (unsigned k = 1; k < sig.n; ++k)
    if (k != j - 1) rest.push_back(alpha[k]);
  unsigned rest_sum = mi_sum(rest);
  if (rest_sum > inner.degree()) return PiPoly();

  PiPoly sum;
  // first inner index is i + a1 + aj - 1; nonzero only within the degree box
  long lo = std::max(0L, 1L - static_cast<long>(a1) - static_cast<long>(aj));
  long hi = static_cast<long>(inner.degree()) - static_cast<long>(rest_sum) -
            static_cast<long>(a1) - static_cast<long>(aj) + 1;
  MultiIndex key(inner.n);
  for (long i = lo; i <= hi; ++i) {
    unsigned first = static_cast<unsigned>(i + a1 + aj - 1);
    std::copy(rest.begin(), rest.end(), key.begin());
    key[rest.size()] = first;
    std::sort(key.begin(), key.end(), std::greater<>());
    sum += u_weight(static_cast<unsigned>(i)) * rec_value(inner, key, table);
  }
  return sum * Rational(8 * (2 * static_cast<long>(aj) + 1));
}

PiPoly term_B(Signature sig, const MultiIndex& alpha, CoeffTable& table) {
  if (sig.g == 0) return PiPoly();
  Signature inner{sig.g - 1, sig.n + 1};
  if (!inner.valid()) return PiPoly();
  unsigned a1 = alpha[0];
  MultiIndex rest(alpha.begin() + 1, alpha.end());
  unsigned rest_sum = mi_sum(rest);
  if (rest_sum > inner.degree()) return PiPoly();
  unsigned pair_budget = inner.degree() - rest_sum;  // k1 + k2 <= this

  PiPoly sum;
  MultiIndex key(inner.n);
  long lo = std::max(0L, 2L - static_cast<long>(a1));
  long hi = static_cast<long>(pair_budget) - static_cast<long>(a1) + 2;
  for (long i = lo; i <= hi; ++i) {
    unsigned K = static_cast<unsigned>(i + a1 - 2);
    PiPoly inner_sum;
    for (unsigned k1 = 0; k1 <= K; ++k1) {
      unsigned k2 = K - k1;
      std::copy(rest.begin(), rest.end(), key.begin());
      key[rest.size()] = k1;
      key[rest.size() + 1] = k2;
      std::sort(key.begin(), key.end(), std::greater<>());
      inner_sum += rec_value(inner, key, table);
    }
    sum += u_weight(static_cast<unsigned>(i)) * inner_sum;
  }
  return sum * Rational(16);
}

PiPoly term_C(Signature sig, const MultiIndex& alpha, CoeffTable& table) {
  unsigned a1 = alpha[0];
  MultiIndex tail(alpha.begin() + 1, alpha.end());
  std::vector<ValueCount> vc = tally(tail);

  PiPoly total;
  // enumerate sub-multisets S of the tail with combinatorial multiplicity:
  // by symmetry of the coefficients this equals the ordered subset sum
  MultiIndex takes(vc.size(), 0);
  for (;;) {
    MultiIndex part1, part2;
    Rational mult(1);
    for (size_t v = 0; v < vc.size(); ++v) {
      mult *= Rational::binomial(vc[v].count, takes[v]);
      for (unsigned c = 0; c < takes[v]; ++c) part1.push_back(vc[v].value);
      for (unsigned c = takes[v]; c < vc[v].count; ++c) part2.push_back(vc[v].value);
    }
    unsigned n1 = static_cast<unsigned>(part1.size());
    unsigned n2 = static_cast<unsigned>(part2.size());
    for (unsigned g1 = 0; g1 <= sig.g; ++g1) {
      unsigned g2 = sig.g - g1;
      if (2 * g1 + n1 <= 1 || 2 * g2 + n2 <= 1) continue;
      Signature s1{g1, n1 + 1}, s2{g2, n2 + 1};
      std::vector<PiPoly> v1 = first_index_profile(s1, part1, table);
      std::vector<PiPoly> v2 = first_index_profile(s2, part2, table);
      if (v1.empty() || v2.empty()) continue;
      unsigned pair_budget = static_cast<unsigned>(v1.size() + v2.size()) - 2;
      long lo = std::max(0L, 2L - static_cast<long>(a1));
      long hi = static_cast<long>(pair_budget) - static_cast<long>(a1) + 2;
      PiPoly config_sum;
      for (long i = lo; i <= hi; ++i) {
        unsigned K = static_cast<unsigned>(i + a1 - 2);
        PiPoly conv;
        unsigned k1_lo = K >= v2.size() ? K - static_cast<unsigned>(v2.size()) + 1 : 0;
        unsigned k1_hi = std::min<unsigned>(K, static_cast<unsigned>(v1.size()) - 1);
        for (unsigned k1 = k1_lo; k1 <= k1_hi && k1 < v1.size(); ++k1)
          conv += v1[k1] * v2[K - k1];
        config_sum += u_weight(static_cast<unsigned>(i)) * conv;
      }
      total += config_sum * mult;
    }
    // next take vector
    size_t idx = 0;
    while (idx < vc.size()) {
      if (++takes[idx] <= vc[idx].count) break;
      takes[idx] = 0;
      ++idx;
    }
    if (idx == vc.size()) break;
  }
  return total * Rational(16);
}

PiPoly term_C_naive(Signature sig, const MultiIndex& alpha, CoeffTable& table) {
  unsigned a1 = alpha[0];
  MultiIndex tail(alpha.begin() + 1, alpha.end());
  PiPoly total;
  for (const SepConfig& cfg : sep_configs(sig)) {
    MultiIndex part1, part2;
    std::vector<bool> in1(tail.size(), false);
    for (size_t p : cfg.I) in1[p] = true;
    for (size_t p = 0; p < tail.size(); ++p)
      (in1[p] ? part1 : part2).push_back(tail[p]);
    Signature s1{cfg.g1, static_cast<unsigned>(part1.size()) + 1};
    Signature s2{sig.g - cfg.g1, static_cast<unsigned>(part2.size()) + 1};
    unsigned s1_rest = mi_sum(part1), s2_rest = mi_sum(part2);
    if (s1_rest > s1.degree() || s2_rest > s2.degree()) continue;
    unsigned b1 = s1.degree() - s1_rest, b2 = s2.degree() - s2_rest;
    long lo = std::max(0L, 2L - static_cast<long>(a1));
    long hi = static_cast<long>(b1 + b2) - static_cast<long>(a1) + 2;
    MultiIndex key1(s1.n), key2(s2.n);
    for (long i = lo; i <= hi; ++i) {
      unsigned K = static_cast<unsigned>(i + a1 - 2);
      PiPoly conv;
      for (unsigned k1 = 0; k1 <= K; ++k1) {
        if (k1 > b1 || K - k1 > b2) continue;
        std::copy(part1.begin(), part1.end(), key1.begin());
        key1[part1.size()] = k1;
        std::sort(key1.begin(), key1.end(), std::greater<>());
        std::copy(part2.begin(), part2.end(), key2.begin());
        key2[part2.size()] = K - k1;
        std::sort(key2.begin(), key2.end(), std::greater<>());
        conv += rec_value(s1, key1, table) * rec_value(s2, key2, table);
      }
      total += u_weight(static_cast<unsigned>(i)) * conv;
    }
  }
  return total * Rational(16);
}

PiPoly coeff_raw_ordered(Signature sig, const MultiIndex& alpha, CoeffTable& table) {
  if (!sig.valid()) throw std::invalid_argument("invalid signature");
  if (alpha.size() != sig.n) throw std::invalid_argument("multi-index arity mismatch");
  if (mi_sum(alpha) > sig.degree()) return PiPoly();
  if (sig.chi() == 1) {
    seed_base(table);
    return *table.find(sig, sorted_desc(alpha));
  }
  ensure_deps(sig, table);
  PiPoly v = term_B(sig, alpha, table) + term_C(sig, alpha, table);
  for (unsigned j = 2; j <= sig.n; ++j) v += term_A(sig, alpha, j, table);
  return v;
}

namespace {

std::vector<Signature> dependencies(Signature sig) {
  std::vector<Signature> deps;
  if (sig.chi() == 1) return deps;
  if (sig.n >= 2) {
    Signature a{sig.g, sig.n - 1};
    if (a.valid()) deps.push_back(a);
  }
  if (sig.g >= 1) {
    Signature b{sig.g - 1, sig.n + 1};
    if (b.valid()) deps.push_back(b);
  }
  for (unsigned g1 = 0; g1 <= sig.g; ++g1)
    for (unsigned n1 = 0; n1 <= sig.n - 1; ++n1) {
      unsigned g2 = sig.g - g1, n2 = sig.n - 1 - n1;
      if (2 * g1 + n1 <= 1 || 2 * g2 + n2 <= 1) continue;
      deps.push_back(Signature{g1, n1 + 1});
      deps.push_back(Signature{g2, n2 + 1});
    }
  std::sort(deps.begin(), deps.end());
  deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
  return deps;
}

std::vector<Signature> closure(std::span<const Signature> targets) {
  std::set<Signature> seen;
  std::vector<Signature> work(targets.begin(), targets.end());
  while (!work.empty()) {
    Signature s = work.back();
    work.pop_back();
    if (!s.valid() || seen.count(s)) continue;
    seen.insert(s);
    for (Signature d : dependencies(s)) work.push_back(d);
  }
  std::vector<Signature> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Signature a, Signature b) {
    return std::tuple(a.chi(), a.g) < std::tuple(b.chi(), b.g);
  });
  return out;
}

void fill_one_table(CoeffTable& table, Signature sig, unsigned threads) {
  if (table.complete(sig)) return;
  if (sig.chi() == 1) {
    seed_base(table);
    return;
  }
  std::vector<MultiIndex> keys = sorted_keys(sig.n, sig.degree());
  std::vector<PiPoly> values(keys.size());
  auto worker = [&](size_t begin, size_t end) {
    for (size_t k = begin; k < end; ++k) {
      const MultiIndex& alpha = keys[k];
      PiPoly v = term_B(sig, alpha, table) + term_C(sig, alpha, table);
      for (unsigned j = 2; j <= sig.n; ++j) v += term_A(sig, alpha, j, table);
      values[k] = std::move(v);
      table.note_computed();
    }
  };
  if (threads <= 1 || keys.size() < 32) {
    worker(0, keys.size());
  } else {
    unsigned nt = std::min(threads, 64u);
    std::vector<std::thread> pool;
    size_t chunk = (keys.size() + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
      size_t b = t * chunk, e = std::min(keys.size(), b + chunk);
      if (b >= e) break;
      pool.emplace_back(worker, b, e);
    }
    for (auto& th : pool) th.join();
  }
  for (size_t k = 0; k < keys.size(); ++k)
    table.insert(sig, std::move(keys[k]), std::move(values[k]));
  table.mark_complete(sig);
}

}  // namespace

void ensure_deps(Signature sig, CoeffTable& table) {
  bool all = true;
  for (Signature d : dependencies(sig))
    if (!table.complete(d)) {
      all = false;
      break;
    }
  if (all) return;
  fill(table, dependencies(sig), 1);
}

void fill(CoeffTable& table, std::span<const Signature> targets, unsigned threads) {
  for (Signature s : closure(targets)) fill_one_table(table, s, threads);
}

std::vector<Signature> signatures_upto(unsigned chi_max, unsigned n_max) {
  std::vector<Signature> out;
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned g = 0;; ++g) {
      Signature s{g, n};
      if (!s.valid()) continue;
      if (s.chi() > chi_max) break;
      out.push_back(s);
    }
  return out;
}

PiPoly coeff(Signature sig, const MultiIndex& alpha, CoeffTable& table) {
  if (!sig.valid())
    throw std::invalid_argument("coeff: invalid signature (need n >= 1, 2g-2+n > 0)");
  if (alpha.size() != sig.n)
    throw std::invalid_argument("coeff: multi-index arity mismatch");
  if (mi_sum(alpha) > sig.degree()) return PiPoly();
  if (!table.complete(sig)) {
    Signature t[1] = {sig};
    fill(table, t, 1);
  }
  return *table.find(sig, sorted_desc(alpha));
}

VolumePolynomial volume_poly(Signature sig, CoeffTable& table) {
  if (!sig.valid()) throw std::invalid_argument("volume_poly: invalid signature");
  if (!table.complete(sig)) {
    Signature t[1] = {sig};
    fill(table, t, 1);
  }
  VolumePolynomial vp;
  vp.sig = sig;
  for (MultiIndex& key : sorted_keys(sig.n, sig.degree())) {
    const PiPoly* p = table.find(sig, key);
    vp.coeffs.emplace(std::move(key), *p);
  }
  return vp;
}

PiPoly vgn(Signature sig, CoeffTable& table) {
  return coeff(sig, MultiIndex(sig.n, 0), table);
}

std::vector<MultiIndex> sorted_keys(unsigned n, unsigned max_sum) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  // descending sequences: entry i bounded by entry i-1 and remaining budget
  auto rec = [&](auto&& self, unsigned pos, unsigned bound, unsigned budget) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= std::min(bound, budget); ++v) {
      cur[pos] = v;
      self(self, pos + 1, v, budget - v);
    }
  };
  rec(rec, 0, max_sum, max_sum);
  return out;
}

}  // namespace wpvol
