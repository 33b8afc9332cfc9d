#pragma once

#include <map>
#include <span>
#include <vector>

#include "wpvol/coeff_table.hpp"
#include "wpvol/pi_poly.hpp"
#include "wpvol/signature.hpp"

namespace wpvol {

/// Volume polynomial of one signature: all coefficients c_{g,n}(alpha) for
/// |alpha| <= 3g-3+n, stored under descending-sorted keys.
struct VolumePolynomial {
  Signature sig;
  std::map<MultiIndex, PiPoly> coeffs;
  const PiPoly& vgn() const { return coeffs.at(MultiIndex(sig.n, 0)); }
};

/// c_{g,n}(alpha), memoized through `table`. Zero for out-of-range indices.
/// Fills the dependency closure of `sig` on first use.
PiPoly coeff(Signature sig, const MultiIndex& alpha, CoeffTable& table);

/// The three topological contributions of Mirzakhani's recursion. `alpha` is
/// taken as given (the first entry plays the special role); lower-|chi|
/// tables must be reachable through `table` (ensure_deps arranges that).
/// term_A is the single-j term, j in {2, .., n}.
PiPoly term_A(Signature sig, const MultiIndex& alpha, unsigned j, CoeffTable& table);
PiPoly term_B(Signature sig, const MultiIndex& alpha, CoeffTable& table);
/// Sum over all separating configurations (grouped by boundary sub-multiset;
/// equal to the plain ordered (g1, I) enumeration by symmetry).
PiPoly term_C(Signature sig, const MultiIndex& alpha, CoeffTable& table);
/// Reference enumeration over ordered (g1, I) subsets; for cross-checking.
PiPoly term_C_naive(Signature sig, const MultiIndex& alpha, CoeffTable& table);

/// Full right-hand side of the recursion with alpha in the given order
/// (no canonicalization at the top level). Exercises coefficient symmetry.
PiPoly coeff_raw_ordered(Signature sig, const MultiIndex& alpha, CoeffTable& table);

/// Ensures every table the recursion at `sig` reads from is complete.
void ensure_deps(Signature sig, CoeffTable& table);

/// Computes every coefficient table in the dependency closure of `targets`,
/// level by level in |chi|; within a level keys are independent and are
/// processed by `threads` workers. Results are schedule independent.
void fill(CoeffTable& table, std::span<const Signature> targets, unsigned threads = 1);

/// Convenience: all (g, n) with n <= n_max and |chi| <= chi_max.
std::vector<Signature> signatures_upto(unsigned chi_max, unsigned n_max);

VolumePolynomial volume_poly(Signature sig, CoeffTable& table);
/// V_{g,n} = c_{g,n}(0,...,0).
PiPoly vgn(Signature sig, CoeffTable& table);

/// All descending-sorted multi-indices of length n with sum <= max_sum.
std::vector<MultiIndex> sorted_keys(unsigned n, unsigned max_sum);

}  // namespace wpvol
