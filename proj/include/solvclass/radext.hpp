#pragma once

#include <map>
#include <string>

#include "solvclass/rational.hpp"

namespace solvclass {

/// Element of a multiquadratic extension Q(sqrt(m_1), ..., sqrt(m_k)),
/// stored as a canonical map radicand -> coefficient: value = sum q_m * sqrt(m).
///
/// Invariants: every radicand is a squarefree positive integer (1 marks the
/// rational part), every stored coefficient is nonzero, and the empty map is
/// the unique representation of zero. Equality is therefore map equality.
class RadExt {
 public:
  RadExt() = default;
  RadExt(const Rational& q) { set_term(1, q); }
  RadExt(int v) : RadExt(Rational(v)) {}

  /// sqrt(x) for a nonnegative rational, canonicalized as (s/q) sqrt(m) with m
  /// squarefree; `sign` selects the square root. Throws on negative input.
  static RadExt sqrt_of(const Rational& x, int sign = +1);

  /// Single term q * sqrt(m); m is reduced to squarefree form.
  static RadExt term(const Rational& q, const Int& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Rational value; throws if the element has an irrational part.
  Rational rational_value() const;

  const std::map<Int, Rational>& terms() const { return terms_; }
  Rational coefficient(const Int& radicand) const;

  RadExt operator-() const;
  RadExt& operator+=(const RadExt& o);
  RadExt& operator-=(const RadExt& o);
  RadExt& operator*=(const RadExt& o);

  friend RadExt operator+(RadExt a, const RadExt& b) { return a += b; }
  friend RadExt operator-(RadExt a, const RadExt& b) { return a -= b; }
  friend RadExt operator*(const RadExt& a, const RadExt& b);

  bool operator==(const RadExt& o) const { return terms_ == o.terms_; }
  bool operator!=(const RadExt& o) const { return !(*this == o); }

  /// Multiplicative inverse, by iterated rationalization over the primes
  /// dividing the radicands. Throws std::domain_error on zero.
  RadExt inverse() const;

  /// Exact sign in {-1, 0, +1}. Zero is detected structurally; otherwise a
  /// rational interval enclosure of each sqrt is refined until 0 is excluded.
  int sign() const;

  /// Structural total order (radicand-sorted coefficient sequence); used for
  /// canonical serialization, not numeric comparison.
  bool operator<(const RadExt& o) const;

  /// Rational approximation with |error| <= bound, bound < 10^-digits
  /// whenever the element is nonzero is not guaranteed; the returned bound is.
  struct Approx {
    Rational value;
    Rational error_bound;
  };
  Approx approx(unsigned digits) const;

  /// Human-readable form, e.g. "14/51 √3" or "3/31 + 5/31 √3".
  std::string str() const;
  /// Machine form with ASCII radicals, e.g. "14/51*sqrt(3)".
  std::string str_ascii() const;

 private:
  void set_term(const Int& m, const Rational& q);
  std::map<Int, Rational> terms_;
};

RadExt operator*(const Rational& q, const RadExt& a);

}  // namespace solvclass
