#include "wpvol/coeff_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpvol {

const PiPoly* CoeffTable::find(Signature sig, const MultiIndex& key) const {
  auto it = tables_.find({sig.g, sig.n});
  if (it == tables_.end()) return nullptr;
  auto jt = it->second.map.find(key);
  return jt == it->second.map.end() ? nullptr : &jt->second;
}

void CoeffTable::insert(Signature sig, MultiIndex key, PiPoly value) {
  tables_[{sig.g, sig.n}].map.emplace(std::move(key), std::move(value));
}

bool CoeffTable::complete(Signature sig) const {
  auto it = tables_.find({sig.g, sig.n});
  return it != tables_.end() && it->second.complete;
}

void CoeffTable::mark_complete(Signature sig) {
  tables_[{sig.g, sig.n}].complete = true;
}

uint64_t CoeffTable::expected_key_count(Signature sig) {
  // partitions with at most n parts, each sum <= degree:
  // dp over part bound then length
  unsigned deg = sig.degree();
  unsigned n = sig.n;
  // count[s] = number of non-increasing sequences of length exactly built so
  // far with sum s; iterate classic partition DP with <= n parts
  std::vector<uint64_t> dp(deg + 1, 0);
  dp[0] = 1;
  // partitions of s into at most n parts == partitions into parts of size <= n
  for (unsigned part = 1; part <= n; ++part)
    for (unsigned s = part; s <= deg; ++s) dp[s] += dp[s - part];
  uint64_t total = 0;
  for (unsigned s = 0; s <= deg; ++s) total += dp[s];
  return total;
}

void CoeffTable::for_each(const std::function<void(Signature, const MultiIndex&,
                                                   const PiPoly&)>& fn) const {
  for (const auto& [gn, sub] : tables_) {
    Signature sig{gn.first, gn.second};
    for (const auto& [key, val] : sub.map) fn(sig, key, val);
  }
}

std::vector<Signature> CoeffTable::signatures() const {
  std::vector<Signature> out;
  out.reserve(tables_.size());
  for (const auto& [gn, sub] : tables_) out.push_back(Signature{gn.first, gn.second});
  std::sort(out.begin(), out.end(), [](Signature a, Signature b) {
    return std::tuple(a.chi(), a.g, a.n) < std::tuple(b.chi(), b.g, b.n);
  });
  return out;
}

std::map<unsigned, unsigned> CoeffTable::frontier() const {
  std::map<unsigned, unsigned> out;
  std::vector<unsigned> ns;
  for (const auto& [gn, sub] : tables_) ns.push_back(gn.second);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (unsigned n : ns) {
    unsigned g = (n >= 3) ? 0 : 1;  // smallest admissible genus for this n
    unsigned last = 0;
    bool any = false;
    for (;; ++g) {
      Signature s{g, n};
      auto it = tables_.find({g, n});
      if (it == tables_.end() || !it->second.complete ||
          it->second.map.size() != expected_key_count(s))
        break;
      last = s.chi();
      any = true;
    }
    if (any) out[n] = last;
  }
  return out;
}

uint64_t CoeffTable::size() const {
  uint64_t total = 0;
  for (const auto& [gn, sub] : tables_) total += sub.map.size();
  return total;
}

}  // namespace wpvol
