#include "solvclass/rational.hpp"

#include <algorithm>
#include <map>

namespace solvclass {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto check_int = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("malformed rational literal");
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) throw std::invalid_argument("malformed rational literal");
    for (std::size_t p = start; p < t.size(); ++p)
      if (!std::isdigit(static_cast<unsigned char>(t[p])))
        throw std::invalid_argument("malformed rational literal: " + t);
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(Int(num), d);
}

std::string rational_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  if (n == 0) return 0;
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = isqrt_floor(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

namespace {

Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// Deterministic Miller-Rabin; the fixed base set is exact for n < 3.3e24.
bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = boost::multiprecision::powm(Int(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < r - 1; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Pollard rho (Brent); n odd composite, no small factors.
Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd_int(x >= y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, int>& out) {
  if (n <= 1) return;
  for (Int p = 2; p * p <= n && p < 100000; p = (p == 2) ? Int(3) : Int(p + 2)) {
    while (n % p == 0) {
      out[p] += 1;
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

SquareFreePart extract_square_part(Int n) {
  if (n <= 0) throw std::domain_error("extract_square_part requires a positive integer");
  std::map<Int, int> factors;
  factor_into(n, factors);
  Int s = 1, m = 1;
  for (const auto& [p, e] : factors) {
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) m *= p;
  }
  return {s, m};
}

std::vector<Int> factor_squarefree(Int n) {
  if (n <= 0) throw std::domain_error("factor_squarefree requires a positive integer");
  std::map<Int, int> factors;
  factor_into(n, factors);
  std::vector<Int> primes;
  for (const auto& [p, e] : factors) {
    if (e != 1) throw std::domain_error("input is not squarefree");
    primes.push_back(p);
  }
  return primes;
}

}  // namespace solvclass
