#include "wpvol/zeta.hpp"

#include <atomic>
#include <deque>
#include <mutex>

namespace wpvol {

namespace {
std::mutex bern_mutex;
std::deque<Rational> bern_cache;  // guarded by bern_mutex
}  // namespace

Rational bernoulli(unsigned m) {
  std::lock_guard lock(bern_mutex);
  if (bern_cache.empty()) bern_cache.push_back(Rational(1));
  // sum_{k<=m} C(m+1,k) B_k = 0  =>  B_m = -(1/(m+1)) sum_{k<m} C(m+1,k) B_k
  while (bern_cache.size() <= m) {
    unsigned n = static_cast<unsigned>(bern_cache.size());
    Rational s(0);
    for (unsigned k = 0; k < n; ++k)
      s += Rational::binomial(n + 1, k) * bern_cache[k];
    bern_cache.push_back(-s / Rational(static_cast<long>(n) + 1));
  }
  return bern_cache[m];
}

PiPoly zeta_even(unsigned i) {
  if (i < 1) throw std::invalid_argument("zeta_even: need i >= 1");
  // zeta(2i) = (-1)^(i+1) B_{2i} 2^(2i) / (2 (2i)!) * pi^(2i)
  Rational c = bernoulli(2 * i) * Rational(2).pow(2 * i) /
               (Rational(2) * Rational::factorial(2 * i));
  if (i % 2 == 0) c = -c;
  return PiPoly::monomial(i, c);
}

PiPoly u_weight(unsigned i) {
  // deque keeps element addresses stable, so the fast path may read without
  // the lock once `ready` covers i
  static std::deque<PiPoly> cache;
  static std::atomic<size_t> ready{0};
  static std::mutex m;
  if (i >= ready.load(std::memory_order_acquire)) {
    std::lock_guard lock(m);
    if (cache.empty()) cache.emplace_back(Rational(1, 2));
    while (cache.size() <= i) {
      unsigned k = static_cast<unsigned>(cache.size());
      Rational factor = Rational(1) - Rational(2) / Rational(2).pow(2 * k);
      cache.push_back(zeta_even(k) * factor);
    }
    ready.store(cache.size(), std::memory_order_release);
  }
  return cache[i];
}

Interval u_num(unsigned i, mpfr_prec_t prec) { return u_weight(i).eval(prec); }

}  // namespace wpvol
