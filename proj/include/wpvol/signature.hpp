#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace wpvol {

/// Surface signature (g, n): genus and number of boundary components.
/// Admissible signatures have n >= 1 and 2g - 2 + n > 0.
struct Signature {
  unsigned g = 0;
  unsigned n = 0;

  bool valid() const { return n >= 1 && 2 * static_cast<int>(g) - 2 + static_cast<int>(n) > 0; }
  /// |chi| = 2g - 2 + n.
  unsigned chi() const { return 2 * g - 2 + n; }
  /// Degree bound: coefficients vanish for |alpha| > 3g - 3 + n.
  unsigned degree() const { return 3 * g - 3 + n; }

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

using MultiIndex = std::vector<unsigned>;

unsigned mi_sum(const MultiIndex& a);
unsigned mi_linf(const MultiIndex& a);
MultiIndex sorted_desc(MultiIndex a);
bool is_sorted_desc(const MultiIndex& a);

struct MiHash {
  size_t operator()(const MultiIndex& a) const {
    size_t h = a.size();
    for (unsigned v : a) h = h * 1000003u + v + 0x9e3779b9u;
    return h;
  }
};

/// Separating-splitting configuration: genus g1 of the piece carrying the
/// boundary subset I (0-based positions into entries 2..n of the index).
struct SepConfig {
  unsigned g1 = 0;
  std::vector<size_t> I;
};

/// All admissible separating configurations of sig, enumerated as ordered
/// pairs (g1, I): both (g1, I) and its complement appear when distinct.
std::vector<SepConfig> sep_configs(Signature sig);

}  // namespace wpvol
