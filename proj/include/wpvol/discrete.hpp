#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "wpvol/asymptotics.hpp"
#include "wpvol/coeff_table.hpp"
#include "wpvol/pi_poly.hpp"
#include "wpvol/recursion.hpp"

namespace wpvol {

/// Total function N_0^n -> Q[pi^2]. Coefficient-backed instances return zero
/// beyond the degree box.
struct GridFunction {
  size_t arity = 0;
  std::function<PiPoly(const MultiIndex&)> eval;

  static GridFunction from_table(Signature sig, CoeffTable& table);
  static GridFunction from_map(size_t arity,
                               std::map<MultiIndex, PiPoly> values);
};

/// Iterated forward difference delta^m f(alpha) via inclusion-exclusion:
/// sum_{0<=b<=m} (-1)^|b| C(m,b) f(alpha+b), computed exactly.
PiPoly delta(const GridFunction& f, const MultiIndex& m, const MultiIndex& alpha);
/// Reference implementation by repeated single-coordinate differences.
PiPoly delta_recursive(const GridFunction& f, const MultiIndex& m,
                       const MultiIndex& alpha);

/// Both sides of the telescoping identity
/// v(alpha) = v(0) - sum_i sum_{k<alpha_i} delta_i v(0^(i-1), k, alpha_>i).
std::pair<PiPoly, PiPoly> discrete_integral_sides(const GridFunction& f,
                                                  const MultiIndex& alpha);

/// Both sides of the derivative identity for v_k = sum_{k1+k2=k} c_{k1,k2}:
/// delta^m v_k  vs  the split sums plus the floor-indexed correction.
/// `c` is a dense matrix extended by zero, m >= 1.
std::pair<PiPoly, PiPoly> conv_derivative_sides(
    const std::vector<std::vector<PiPoly>>& c, unsigned m, unsigned k);

/// Multivariate polynomial with coefficients in Q[pi^2]; evaluation on N_0^n
/// is exact.
class Poly {
 public:
  explicit Poly(size_t nvars) : nvars_(nvars) {}
  static Poly constant(size_t nvars, PiPoly c);

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return mono_.empty(); }
  unsigned total_degree() const;
  const std::map<std::vector<unsigned>, PiPoly>& monomials() const { return mono_; }

  void add_monomial(std::vector<unsigned> exps, const PiPoly& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const PiPoly& c) const;

  PiPoly eval(const MultiIndex& alpha) const;
  /// Substitute variable v by the univariate polynomial q(y) in a fresh
  /// variable of the same slot (used for shifts x -> x - a).
  Poly substitute(size_t var, const Poly& univariate_in_same_slot) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  size_t nvars_;
  std::map<std::vector<unsigned>, PiPoly> mono_;
};

/// sum_{k=0}^{m-1} k^e as a polynomial in m (degree e+1), exact via
/// Bernoulli numbers.
Poly faulhaber(unsigned e);

/// Degree-<=K discrete Taylor polynomial of f at 0, built by the
/// integrate-the-differences recursion. Reproduces polynomials of degree
/// <= K exactly on all of N_0^n.
Poly taylor_poly(const GridFunction& f, unsigned K);

/// Element of the class "polynomial of degree <= K in each variable greater
/// than a": one polynomial region per (I, beta) with I the coordinates
/// >= a and beta the exceptional small values.
struct ShiftedPoly {
  struct Region {
    uint32_t mask = 0;      // bit i set: alpha_i >= a
    MultiIndex beta;        // values on the complement, each < a
    Poly poly;              // in |I| variables, argument gamma = alpha_I - a
    Region() : poly(0) {}
  };
  size_t arity = 0;
  unsigned K = 0;
  unsigned a = 0;
  std::vector<Region> regions;

  PiPoly eval(const MultiIndex& alpha) const;
  const Region& region_of(const MultiIndex& alpha) const;
};

/// Shifted discrete Taylor expansion: decompose N_0^n into (I, beta)
/// regions, shift each by a, and Taylor-expand regionwise. Agrees with f
/// pointwise wherever |alpha|_inf < a; a = 0 degenerates to taylor_poly.
ShiftedPoly shifted_taylor(const GridFunction& f, unsigned K, unsigned a);

/// Structured approximant sum_t coeff_t x^(m_t) prod_{I+} cosh(x_i/2)
/// prod_{I-} sinhc(x_i/2), normalized by V_{g,n}. Monomial exponents are
/// even and I+ and I- are disjoint.
struct Approximant {
  struct Term {
    PiPoly coeff;
    MultiIndex mono;
    uint32_t iplus = 0;
    uint32_t iminus = 0;
  };
  Signature sig;
  unsigned order = 0;
  unsigned shift = 0;  // threshold a used to build it
  std::vector<Term> terms;
  PiPoly normalizer;  // V_{g,n}

  Interval eval(std::span<const Rational> x, mpfr_prec_t prec) const;
  /// Max total degree of x_i, i in I+ u I-, over the terms (must be <= 2N).
  unsigned trig_degree() const;
  /// Exact sum of the coefficients of the x-free terms; equals V_{g,n}.
  PiPoly constant_mass() const;
};

/// Builds the order-N approximant from the shifted Taylor expansion of
/// alpha -> c_{g,n}(alpha) with K = 2N and threshold a, resummed through the
/// p_k basis into cosh/sinhc form.
Approximant build_FN(Signature sig, unsigned N, unsigned a, CoeffTable& table);

/// The shifted expansion underlying build_FN (exposed for exactness tests).
ShiftedPoly shifted_coeff_expansion(Signature sig, unsigned N, unsigned a,
                                    CoeffTable& table);

struct DerivStat {
  unsigned g = 0;
  double sup = 0.0;          // measured sup of the normalized statistic
  bool empty = true;         // no admissible (m, alpha) at this genus
  MultiIndex arg_m, arg_alpha;
};

struct DerivStatReport {
  unsigned n = 0, N = 0, a = 0;
  std::vector<DerivStat> per_g;
  bool bounded_trend = false;  // max over g <= 2 x value at smallest
                               // non-empty g
  double max_sup = 0.0;
  double base_sup = 0.0;
};

/// Sup over admissible (m, alpha) with |m| in {2N-1, 2N}, alpha_i >= a where
/// m_i > 0, alpha in the degree box plus one cell, of
/// |delta^m c_{g,n}(alpha)| <g>^N / (<alpha>^N V_{g,n}).  N = 0 measures
/// sup c(alpha)/V_{g,n} which is exactly 1.
DerivStatReport derivative_bound_stat(unsigned n, unsigned N, unsigned a,
                                      std::span<const unsigned> g_range,
                                      CoeffTable& table, mpfr_prec_t prec = 192);

}  // namespace wpvol
