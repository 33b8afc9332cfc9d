#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>

#include "wpvol/pi_poly.hpp"
#include "wpvol/signature.hpp"

namespace wpvol {

/// Reporting convention for the (1,1) base polynomial. Under `paper` the
/// once-holed torus volume is pi^2/6 + x^2/24; under `half` it is the
/// involution-quotiented pi^2/12 + x^2/48. Every other volume is convention
/// independent: the recursion always consumes the involution-weighted (1,1)
/// values internally.
enum class Convention { paper, half };

inline const char* convention_name(Convention c) {
  return c == Convention::paper ? "paper" : "half";
}

/// Memoized store of volume coefficients c_{g,n}(alpha), keyed by signature
/// and descending-sorted multi-index. Values are single monomials
/// r * pi^(2(3g-3+n-|alpha|)) with r > 0.
class CoeffTable {
 public:
  explicit CoeffTable(Convention c = Convention::paper) : conv_(c) {}

  CoeffTable(CoeffTable&& o) noexcept
      : conv_(o.conv_), tables_(std::move(o.tables_)), computed_(o.computed_.load()) {}
  CoeffTable& operator=(CoeffTable&& o) noexcept {
    conv_ = o.conv_;
    tables_ = std::move(o.tables_);
    computed_.store(o.computed_.load());
    return *this;
  }
  CoeffTable(const CoeffTable&) = delete;
  CoeffTable& operator=(const CoeffTable&) = delete;

  Convention convention() const { return conv_; }

  /// nullptr when the key is not stored. `key` must be sorted descending.
  const PiPoly* find(Signature sig, const MultiIndex& key) const;
  void insert(Signature sig, MultiIndex key, PiPoly value);

  bool complete(Signature sig) const;
  void mark_complete(Signature sig);

  /// Number of keys a complete (g,n) table holds: descending multi-indices
  /// of length n with sum <= 3g-3+n.
  static uint64_t expected_key_count(Signature sig);

  void for_each(const std::function<void(Signature, const MultiIndex&,
                                         const PiPoly&)>& fn) const;
  /// Signatures present, sorted by (|chi|, g).
  std::vector<Signature> signatures() const;

  /// Largest |chi| per n with every table of that n and smaller |chi|
  /// complete.
  std::map<unsigned, unsigned> frontier() const;

  uint64_t computed_count() const { return computed_.load(); }
  void note_computed() const { computed_.fetch_add(1, std::memory_order_relaxed); }
  uint64_t size() const;

 private:
  struct SubTable {
    std::unordered_map<MultiIndex, PiPoly, MiHash> map;
    bool complete = false;
  };
  Convention conv_;
  std::map<std::pair<unsigned, unsigned>, SubTable> tables_;
  mutable std::atomic<uint64_t> computed_{0};
};

}  // namespace wpvol
