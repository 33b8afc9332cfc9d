#include "wpvol/pi_poly.hpp"

#include <vector>

namespace wpvol {

PiPoly PiPoly::operator-() const {
  PiPoly r;
  for (const auto& [d, c] : terms_) r.terms_[d] = -c;
  return r;
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
  for (const auto& [d, c] : o.terms_) {
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_[d] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
  for (const auto& [d, c] : o.terms_) {
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_[d] = -c;
    } else {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
  PiPoly r;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) {
      unsigned d = da + db;
      auto it = r.terms_.find(d);
      if (it == r.terms_.end()) {
        Rational c = ca * cb;
        if (!c.is_zero()) r.terms_[d] = std::move(c);
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

PiPoly& PiPoly::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= r;
  return *this;
}

Interval PiPoly::eval(mpfr_prec_t prec) const {
  Interval acc(prec);
  if (is_zero()) return acc;
  Interval pi2 = Interval::pi(prec);
  pi2 = pi2 * pi2;
  // Horner over descending exponents
  unsigned prev = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (first) {
      acc = Interval::exact(it->second, prec);
      prev = it->first;
      first = false;
      continue;
    }
    acc = acc * pi2.pow(prev - it->first) + Interval::exact(it->second, prec);
    prev = it->first;
  }
  if (prev > 0) acc = acc * pi2.pow(prev);
  return acc;
}

std::string PiPoly::cache_str() const {
  std::string out;
  for (const auto& [d, c] : terms_) {
    if (!out.empty()) out += ',';
    out += std::to_string(d) + ':' + c.str_canonical();
  }
  return out;
}

PiPoly PiPoly::parse_cache(std::string_view s) {
  PiPoly p;
  if (s.empty()) throw std::invalid_argument("PiPoly: empty value");
  long prev = -1;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string_view item =
        s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("PiPoly: missing ':' in term");
    unsigned d = 0;
    std::string ds(item.substr(0, colon));
    if (ds.empty() || ds.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("PiPoly: bad exponent '" + ds + "'");
    d = static_cast<unsigned>(std::stoul(ds));
    if (static_cast<long>(d) <= prev)
      throw std::invalid_argument("PiPoly: exponents not strictly ascending");
    prev = d;
    Rational c = Rational::parse_canonical(item.substr(colon + 1));
    if (c.is_zero()) throw std::invalid_argument("PiPoly: zero coefficient stored");
    p.terms_[d] = c;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return p;
}

std::string PiPoly::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    bool neg = c.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational a = c.abs();
    std::string num = a.str();
    std::string den;
    if (auto slash = num.find('/'); slash != std::string::npos) {
      den = num.substr(slash + 1);
      num = num.substr(0, slash);
    }
    unsigned d = it->first;
    if (d == 0) {
      out += num;
    } else {
      if (num != "1") out += num + "*";
      out += "pi^" + std::to_string(2 * d);
    }
    if (!den.empty()) out += "/" + den;
  }
  return out;
}

Order compare(const PiPoly& a, const PiPoly& b, mpfr_prec_t max_bits) {
  if (a == b) return Order::equal;
  PiPoly diff = a - b;
  for (mpfr_prec_t prec = 64; prec <= max_bits; prec *= 2) {
    Interval v = diff.eval(prec);
    if (v.is_positive()) return Order::greater;
    if (v.is_negative()) return Order::less;
  }
  throw undecided_error(max_bits);
}

}  // namespace wpvol
