#pragma once

#include <random>
#include <string>
#include <vector>

#include "solvclass/linalg.hpp"
#include "solvclass/radext.hpp"

namespace solvclass::testing {

inline Rational rat(const std::string& s) { return parse_rational(s); }

inline RatVec ratvec(const std::vector<std::string>& v) {
  RatVec out;
  for (const std::string& s : v) out.push_back(parse_rational(s));
  return out;
}

/// Parses sums of the forms "q", "q*sqrt(m)", "sqrt(m)", "sqrt(p/q)",
/// e.g. "14/51*sqrt(3)", "3/31+5/31*sqrt(3)", "-1+sqrt(2)".
inline RadExt rx(const std::string& s) {
  RadExt out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    std::size_t end = pos;
    int depth = 0;
    while (end < s.size()) {
      if (s[end] == '(') ++depth;
      if (s[end] == ')') --depth;
      if (depth == 0 && (s[end] == '+' || s[end] == '-') && end != pos) break;
      ++end;
    }
    std::string term = s.substr(pos, end - pos);
    pos = end;

    auto srq = term.find("sqrt(");
    if (srq == std::string::npos) {
      out += RadExt(Rational(sign) * parse_rational(term));
      continue;
    }
    Rational coeff(1);
    if (srq > 0) {
      std::string c = term.substr(0, srq);
      if (!c.empty() && c.back() == '*') c.pop_back();
      if (!c.empty()) coeff = parse_rational(c);
    }
    std::string inner = term.substr(srq + 5);
    if (!inner.empty() && inner.back() == ')') inner.pop_back();
    Rational m = parse_rational(inner);
    out += Rational(sign) * (RadExt(coeff) * RadExt::sqrt_of(m));
  }
  return out;
}

inline std::vector<RadExt> rxvec(const std::vector<std::string>& v) {
  std::vector<RadExt> out;
  for (const std::string& s : v) out.push_back(rx(s));
  return out;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

  Rational rational(int max_num = 9, int max_den = 9) {
    int num = pick(-max_num, max_num);
    int den = pick(1, max_den);
    return Rational(num, den);
  }

  Rational nonzero_rational(int max_num = 9, int max_den = 9) {
    Rational q = rational(max_num, max_den);
    while (q == 0) q = rational(max_num, max_den);
    return q;
  }

  RadExt radext(int max_terms = 3) {
    static const int radicands[] = {1, 2, 3, 5, 6, 7, 10, 11, 13, 15};
    RadExt out;
    int terms = pick(0, max_terms);
    for (int t = 0; t < terms; ++t)
      out += RadExt::term(rational(), radicands[pick(0, 9)]);
    return out;
  }

  RadExt nonzero_radext(int max_terms = 3) {
    RadExt v = radext(max_terms);
    while (v.is_zero()) v = radext(max_terms);
    return v;
  }
};

}  // namespace solvclass::testing
