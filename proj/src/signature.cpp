#include "wpvol/signature.hpp"

#include <algorithm>

namespace wpvol {

unsigned mi_sum(const MultiIndex& a) {
  unsigned s = 0;
  for (unsigned v : a) s += v;
  return s;
}

unsigned mi_linf(const MultiIndex& a) {
  unsigned m = 0;
  for (unsigned v : a) m = std::max(m, v);
  return m;
}

MultiIndex sorted_desc(MultiIndex a) {
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

bool is_sorted_desc(const MultiIndex& a) {
  return std::is_sorted(a.begin(), a.end(), std::greater<>());
}

std::vector<SepConfig> sep_configs(Signature sig) {
  std::vector<SepConfig> out;
  if (!sig.valid()) return out;
  const size_t tail = sig.n - 1;  // positions of boundary labels 2..n
  for (unsigned g1 = 0; g1 <= sig.g; ++g1) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << tail); ++mask) {
      unsigned n1 = static_cast<unsigned>(__builtin_popcountll(mask));
      unsigned n2 = static_cast<unsigned>(tail) - n1;
      unsigned g2 = sig.g - g1;
      if (2 * g1 + n1 <= 1 || 2 * g2 + n2 <= 1) continue;
      SepConfig c;
      c.g1 = g1;
      for (size_t b = 0; b < tail; ++b)
        if (mask & (uint64_t{1} << b)) c.I.push_back(b);
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace wpvol
