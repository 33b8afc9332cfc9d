#pragma once

#include "wpvol/interval.hpp"
#include "wpvol/pi_poly.hpp"
#include "wpvol/rational.hpp"

namespace wpvol {

/// Bernoulli number B_m with the convention B_1 = -1/2. Cached; safe for
/// concurrent readers.
Rational bernoulli(unsigned m);

/// zeta(2i) as the exact monomial (-1)^(i+1) B_{2i} (2 pi)^(2i) / (2 (2i)!),
/// i >= 1. The pi-degree is exactly i.
PiPoly zeta_even(unsigned i);

/// Recursion weights: u_0 = 1/2 and u_i = zeta(2i) (1 - 2^(1-2i)). Cached.
PiPoly u_weight(unsigned i);

/// Validated numeric enclosure of u_i.
Interval u_num(unsigned i, mpfr_prec_t prec);

}  // namespace wpvol
