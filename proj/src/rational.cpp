#include "wpvol/rational.hpp"

#include <cctype>
#include <cstring>

namespace wpvol {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view intpart = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (!valid_integer(intpart.empty() ? "0" : intpart) || frac.empty() ||
        !valid_integer(frac))
      throw std::invalid_argument("Rational: bad decimal '" + std::string(s) + "'");
    bool neg = !intpart.empty() && intpart[0] == '-';
    std::string digits(intpart.empty() || intpart == "-" || intpart == "+"
                           ? ""
                           : std::string(intpart[0] == '+' || intpart[0] == '-'
                                             ? intpart.substr(1)
                                             : intpart));
    digits += std::string(frac);
    Rational num = parse(digits.empty() ? "0" : digits);
    Rational den(1);
    for (size_t i = 0; i < frac.size(); ++i) den *= Rational(10);
    Rational r = num / den;
    return neg ? -r : r;
  }
  auto slash = s.find('/');
  std::string_view ns = slash == std::string_view::npos ? s : s.substr(0, slash);
  std::string_view ds = slash == std::string_view::npos
                            ? std::string_view("1")
                            : s.substr(slash + 1);
  if (!valid_integer(ns) || !valid_integer(ds))
    throw std::invalid_argument("Rational: bad literal '" + std::string(s) + "'");
  Rational r;
  mpz_t num, den;
  mpz_init_set_str(num, std::string(ns).c_str(), 10);
  mpz_init_set_str(den, std::string(ds).c_str(), 10);
  if (mpz_sgn(den) == 0) {
    mpz_clear(num);
    mpz_clear(den);
    throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
  }
  mpq_set_num(r.q_, num);
  mpq_set_den(r.q_, den);
  mpq_canonicalize(r.q_);
  mpz_clear(num);
  mpz_clear(den);
  return r;
}

Rational Rational::parse_canonical(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("Rational: expected p/q, got '" + std::string(s) + "'");
  Rational r = parse(s);
  if (r.str_canonical() != s)
    throw std::invalid_argument("Rational: '" + std::string(s) +
                                "' is not in lowest terms with positive denominator");
  return r;
}

Rational Rational::pow(unsigned e) const {
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), e);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), e);
  // num/den already coprime, so the powers are too
  return r;
}

std::string Rational::str_canonical() const {
  char* ns = mpz_get_str(nullptr, 10, mpq_numref(q_));
  char* ds = mpz_get_str(nullptr, 10, mpq_denref(q_));
  std::string out = std::string(ns) + "/" + ds;
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(ns, std::strlen(ns) + 1);
  freefn(ds, std::strlen(ds) + 1);
  return out;
}

std::string Rational::str() const {
  std::string c = str_canonical();
  if (c.size() >= 2 && c.substr(c.size() - 2) == "/1") c.resize(c.size() - 2);
  return c;
}

Rational Rational::factorial(unsigned n) {
  Rational r;
  mpz_fac_ui(mpq_numref(r.q_), n);
  return r;
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
  Rational r;
  if (k > n) return Rational(0);
  mpz_bin_uiui(mpq_numref(r.q_), n, k);
  return r;
}

Rational Rational::from_double(double d) {
  Rational r;
  mpq_set_d(r.q_, d);
  return r;
}

}  // namespace wpvol
