#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace solvclass {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "p/q" or "-p/q"; throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(const std::string& s);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& q);

/// Floor of the square root; n must be nonnegative.
Int isqrt_floor(const Int& n);

bool is_perfect_square(const Int& n, Int* root = nullptr);

/// Decomposition n = square_root^2 * radicand with radicand squarefree (n > 0).
struct SquareFreePart {
  Int square_root;
  Int radicand;
};
SquareFreePart extract_square_part(Int n);

/// Prime factors of a squarefree positive integer, ascending.
std::vector<Int> factor_squarefree(Int n);

}  // namespace solvclass
