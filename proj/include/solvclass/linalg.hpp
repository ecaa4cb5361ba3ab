#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "solvclass/radext.hpp"
#include "solvclass/rational.hpp"

namespace solvclass {

using RatVec = std::vector<Rational>;
using F2Vec = std::vector<std::uint8_t>;

/// Dense rational matrix, row-major.
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  RatMatrix transposed() const;
  RatVec apply(const RatVec& x) const;
};

struct F2Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> a;

  F2Matrix() = default;
  F2Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::uint8_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::uint8_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  F2Vec apply(const F2Vec& x) const;
};

/// Solutions of a linear system as particular + span(basis). |basis| = 0 means
/// the solution is unique.
struct RatAffineSet {
  RatVec particular;
  std::vector<RatVec> basis;
  bool unique() const { return basis.empty(); }
};

struct F2AffineSet {
  F2Vec particular;
  std::vector<F2Vec> basis;
  bool unique() const { return basis.empty(); }
  /// All 2^|basis| solutions, in deterministic order.
  std::vector<F2Vec> enumerate() const;
};

int rank(RatMatrix m);

/// Basis of the right kernel {v : Mv = 0}, echelon-normalized: one vector per
/// free column, with unit entry at that column. Deterministic.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

/// Full solution set of Mx = b, or nullopt when inconsistent.
std::optional<RatAffineSet> solve_affine(const RatMatrix& m, const RatVec& b);

std::vector<F2Vec> f2_kernel_basis(const F2Matrix& m);
std::optional<F2AffineSet> f2_solve_affine(const F2Matrix& m, const F2Vec& b);

/// Componentwise logsign: 1 for negative entries, 0 for positive.
/// Throws std::domain_error on a zero entry.
F2Vec logsign(const std::vector<RadExt>& v);
F2Vec logsign(const RatVec& v);

}  // namespace solvclass
