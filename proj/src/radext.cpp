#include "solvclass/radext.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace solvclass {

void RadExt::set_term(const Int& m, const Rational& q) {
  if (q == 0)
    terms_.erase(m);
  else
    terms_[m] = q;
}

RadExt RadExt::term(const Rational& q, const Int& m) {
  if (m <= 0) throw std::domain_error("radicand must be positive");
  if (q == 0) return RadExt();
  auto sf = extract_square_part(m);
  RadExt r;
  r.set_term(sf.radicand, q * sf.square_root);
  return r;
}

RadExt RadExt::sqrt_of(const Rational& x, int sign) {
  if (x < 0) throw std::domain_error("sqrt of negative rational");
  if (x == 0) return RadExt();
  // sqrt(p/q) = sqrt(p*q)/q
  Int pq = numerator(x) * denominator(x);
  auto sf = extract_square_part(pq);
  Rational coeff(sf.square_root, denominator(x));
  if (sign < 0) coeff = -coeff;
  RadExt r;
  r.set_term(sf.radicand, coeff);
  return r;
}

bool RadExt::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 1;
}

Rational RadExt::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw std::domain_error("element is irrational");
  return terms_.begin()->second;
}

Rational RadExt::coefficient(const Int& radicand) const {
  auto it = terms_.find(radicand);
  return it == terms_.end() ? Rational(0) : it->second;
}

RadExt RadExt::operator-() const {
  RadExt r;
  for (const auto& [m, q] : terms_) r.terms_[m] = -q;
  return r;
}

RadExt& RadExt::operator+=(const RadExt& o) {
  for (const auto& [m, q] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = q;
    } else {
      it->second += q;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

RadExt& RadExt::operator-=(const RadExt& o) { return *this += -o; }

RadExt operator*(const RadExt& a, const RadExt& b) {
  RadExt r;
  for (const auto& [m1, q1] : a.terms_) {
    for (const auto& [m2, q2] : b.terms_) {
      // sqrt(m1) sqrt(m2) = g sqrt((m1/g)(m2/g)) with g = gcd: the cofactors
      // are coprime and squarefree, so their product is squarefree.
      Int g = boost::multiprecision::gcd(m1, m2);
      Int m = (m1 / g) * (m2 / g);
      Rational q = q1 * q2 * g;
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_[m] = q;
      } else {
        it->second += q;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

RadExt& RadExt::operator*=(const RadExt& o) {
  *this = *this * o;
  return *this;
}

RadExt operator*(const Rational& q, const RadExt& a) { return RadExt(q) * a; }

RadExt RadExt::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return RadExt(Rational(1) / rational_value());
  // Pick a prime p dividing some radicand, split a = x + sqrt(p) y with x, y
  // free of p, and recurse on the conjugate product x^2 - p y^2.
  Int p = 0;
  for (const auto& [m, q] : terms_) {
    (void)q;
    if (m == 1) continue;
    auto primes = factor_squarefree(m);
    if (p == 0 || primes.front() < p) p = primes.front();
  }
  RadExt x, y;
  for (const auto& [m, q] : terms_) {
    if (m % p == 0)
      y.set_term(m / p, q);
    else
      x.set_term(m, q);
  }
  RadExt sqrt_p = RadExt::term(Rational(1), p);
  RadExt conj = x - sqrt_p * y;
  RadExt norm = x * x - RadExt(Rational(p)) * y * y;
  return conj * norm.inverse();
}

int RadExt::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return rational_value() > 0 ? 1 : -1;
  // Interval refinement: sqrt(m) lies in [t, t+1]/2^k with t = isqrt(m 4^k).
  for (unsigned k = 16;; k *= 2) {
    Int scale = Int(1) << k;
    Rational lo(0), hi(0);
    for (const auto& [m, q] : terms_) {
      if (m == 1) {
        lo += q;
        hi += q;
        continue;
      }
      Int t = isqrt_floor(m * scale * scale);
      Rational s_lo(t, scale), s_hi(t + 1, scale);
      if (q > 0) {
        lo += q * s_lo;
        hi += q * s_hi;
      } else {
        lo += q * s_hi;
        hi += q * s_lo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

bool RadExt::operator<(const RadExt& o) const {
  auto it = terms_.begin(), jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return jt != o.terms_.end();
}

RadExt::Approx RadExt::approx(unsigned digits) const {
  Int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Rational value(0), err(0);
  Rational step(1, scale);
  for (const auto& [m, q] : terms_) {
    if (m == 1) {
      value += q;
      continue;
    }
    Int t = isqrt_floor(m * scale * scale);
    value += q * Rational(t, scale);
    err += abs(q) * step;
  }
  return {value, err};
}

namespace {
std::string coeff_str(const Rational& q) { return rational_str(q); }
}  // namespace

std::string RadExt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, q] : terms_) {
    Rational v = q;
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (m == 1) {
      os << coeff_str(v);
    } else {
      if (v != 1) os << coeff_str(v) << " ";
      os << "√" << m.str();
    }
  }
  return os.str();
}

std::string RadExt::str_ascii() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, q] : terms_) {
    Rational v = q;
    if (!first) {
      os << (v < 0 ? "-" : "+");
      if (v < 0) v = -v;
    } else if (v < 0) {
      os << "-";
      v = -v;
    }
    first = false;
    if (m == 1) {
      os << coeff_str(v);
    } else {
      if (v != 1) os << coeff_str(v) << "*";
      os << "sqrt(" << m.str() << ")";
    }
  }
  return os.str();
}

}  // namespace solvclass
