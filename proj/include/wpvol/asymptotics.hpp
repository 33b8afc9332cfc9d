#pragma once

#include <cstdint>
#include <span>

#include "wpvol/coeff_table.hpp"
#include "wpvol/interval.hpp"
#include "wpvol/pi_poly.hpp"
#include "wpvol/recursion.hpp"

namespace wpvol {

/// sinh(x)/x with value 1 at 0 (series below a small threshold).
double sinhc(double x);

/// l^1 norm |x| = sum x_i as an exact rational.
Rational l1(std::span<const Rational> x);
/// Japanese bracket <x> = sqrt(1 + |x|^2).
Interval jap(std::span<const Rational> x, mpfr_prec_t prec);
Interval jap(unsigned g, mpfr_prec_t prec);

/// V_{g,n}(x) evaluated exactly in Q[pi^2] for rational boundary lengths:
/// sum_alpha c(alpha) prod x_j^(2 a_j) / (2^(2 a_j) (2 a_j + 1)!).
PiPoly eval_volume_exact(Signature sig, std::span<const Rational> x, CoeffTable& table);

/// Numeric front-end: exact evaluation followed by one validated rounding.
Interval eval_volume(Signature sig, std::span<const Rational> x, CoeffTable& table,
                     mpfr_prec_t prec);

/// First-order approximant prod_j sinhc(x_j / 2) (independent of genus).
Interval F0(std::span<const Rational> x, mpfr_prec_t prec);

/// Second-order approximant with exact volume ratios
/// V_{g-1,n+1}/V_{g,n} and V_{g,n-1}/V_{g,n}; indicators 1_{g>=1}, 1_{n>=2}.
Interval F1(Signature sig, std::span<const Rational> x, CoeffTable& table,
            mpfr_prec_t prec);

/// Genus-free second-order coefficient f_n^{(1)}(x).
Interval f1(std::span<const Rational> x, mpfr_prec_t prec);

/// p_k(alpha) = prod_{j=0}^{k-1} (2 alpha + 1 - j); empty product = 1.
int64_t p_k(unsigned k, unsigned alpha);
Rational p_k_rat(unsigned k, const Rational& alpha);

/// Partial sum  sum_{a<=T} p_k(a) x^(2a) / (2^(2a) (2a+1)!).
Interval pk_generating_sum(unsigned k, const Rational& x, unsigned truncation,
                           mpfr_prec_t prec);
/// Closed form: (x/2)^k sinhc(x/2) for even k, (x/2)^(k-1) cosh(x/2) for odd.
Interval pk_closed_form(unsigned k, const Rational& x, mpfr_prec_t prec);

/// Second-order model of the discrete derivative delta_1 c_{g,n}(alpha):
/// 4 (4 a_1 - 1 + 2 1_{a1=0}) V_{g-1,n+1} 1_{g>=1}
///   + 4 sum_{j>=2} (4 a_j + 2 - 1_{a1=a_j=0}) V_{g,n-1} 1_{n>=2}.
PiPoly psi1(Signature sig, const MultiIndex& alpha, CoeffTable& table);

/// Second-order model of the coefficient itself (exact in Q[pi^2]).
PiPoly c_hat1(Signature sig, const MultiIndex& alpha, CoeffTable& table);

/// Poisson intensity  integral_a^b (2/x) sinh^2(x/2) dx, enclosed to the
/// requested absolute error. Requires 0 < a <= b.
Interval lambda_intensity(const Rational& a, const Rational& b, double abs_err,
                          mpfr_prec_t prec = 192);

}  // namespace wpvol
