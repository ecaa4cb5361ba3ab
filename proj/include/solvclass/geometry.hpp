#pragma once

#include <optional>
#include <vector>

#include "solvclass/diagram.hpp"
#include "solvclass/radext.hpp"

namespace solvclass {

using RadVec = std::vector<RadExt>;

/// Dense matrix over the multiquadratic field.
struct RadMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<RadExt> a;

  RadMatrix() = default;
  RadMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static RadMatrix identity(int n);

  RadExt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const RadExt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  RadExt trace() const;
  bool is_zero() const;

  friend RadMatrix operator*(const RadMatrix& x, const RadMatrix& y);
  friend RadMatrix operator+(const RadMatrix& x, const RadMatrix& y);
  friend RadMatrix operator-(const RadMatrix& x, const RadMatrix& y);
  friend RadMatrix operator*(const RadExt& s, const RadMatrix& x);
  friend bool operator==(const RadMatrix& x, const RadMatrix& y) = default;
};

/// Polynomial over the multiquadratic field, ascending coefficients.
struct RadPoly {
  std::vector<RadExt> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim();
  RadPoly derivative() const;
  RadPoly monic() const;
  RadMatrix eval(const RadMatrix& m) const;

  friend RadPoly operator*(const RadPoly& p, const RadPoly& q);
  friend RadPoly operator-(const RadPoly& p, const RadPoly& q);
  friend bool operator==(const RadPoly& p, const RadPoly& q) = default;
};

/// Quotient and remainder; the divisor must be nonzero.
std::pair<RadPoly, RadPoly> poly_divmod(const RadPoly& p, const RadPoly& d);
RadPoly poly_gcd(RadPoly p, RadPoly q);

/// Characteristic polynomial det(lambda I - m) by the Faddeev-LeVerrier
/// recursion, exact over the field. Returned monic, ascending coefficients.
RadPoly char_poly(const RadMatrix& m);

/// Nilpotent-or-solvable Lie algebra with a diagonal metric in a fixed basis.
/// The structure tensor is antisymmetric in its first two slots.
class MetricLieAlgebra {
 public:
  MetricLieAlgebra(int n, RatVec metric);

  static MetricLieAlgebra from_diagram(const NiceDiagram& d, const RadVec& c_per_class,
                                       RatVec metric);

  int n() const { return n_; }
  const RatVec& metric() const { return metric_; }

  /// Coefficient of e_k in [e_i, e_j]; 1-based indices.
  const RadExt& c(int i, int j, int k) const {
    return c_[((static_cast<std::size_t>(i) - 1) * n_ + (j - 1)) * n_ + (k - 1)];
  }
  /// Sets [e_i, e_j] ∋ v e_k (and the antisymmetric mirror).
  void set_bracket(int i, int j, int k, const RadExt& v);

  RadVec bracket(const RadVec& x, const RadVec& y) const;

 private:
  int n_;
  std::vector<RadExt> c_;
  RatVec metric_;
};

struct JacobiFailure {
  int i, j, k;
};
/// Exact Jacobi check; nullopt when the identity holds.
std::optional<JacobiFailure> jacobi_check(const MetricLieAlgebra& L);

struct DerivationFailure {
  int i, j;
};
/// D[e_i,e_j] = [De_i,e_j] + [e_i,De_j] for all pairs; D(r,c) acts by columns.
std::optional<DerivationFailure> is_derivation(const MetricLieAlgebra& L, const RadMatrix& D);

/// Diagonal Ricci operator of a nice Lie algebra with diagonal metric:
/// Ric = (1/2)(tM X)^D with x_I = c_I^2 (e^{M}g)_I. Returns the diagonal.
RadVec ricci_diagonal(const NiceDiagram& d, const RadVec& c_per_class, const RatVec& metric);

/// Ricci operator from the Koszul formula (one index raised).
RadMatrix ricci_general(const MetricLieAlgebra& L);

struct NilsolitonResidual {
  RadMatrix ricci_residual;      // Ric - RHS of the equation
  RadVec ad_trace_residual;      // Tr(ad e_b ∘ D*) per basis vector
  bool ok() const;
};
/// Both parts of the generalized nilsoliton condition, exactly.
NilsolitonResidual check_generalized_nilsoliton(const MetricLieAlgebra& L, const RadMatrix& D);

/// g ⋊_D span(e_{n+1}) with [e_{n+1}, v] = Dv and metric extended by +1.
MetricLieAlgebra extend(const MetricLieAlgebra& L, const RadMatrix& D);

struct EinsteinOutcome {
  bool einstein = false;
  RadExt lambda;       // valid when einstein
  int row = 0, col = 0;  // first off-scalar entry otherwise
};
EinsteinOutcome einstein_check(const MetricLieAlgebra& L);

struct CurvatureReport {
  RadMatrix riemann_op;                 // on Λ², basis e^{ij}, i<j, lex
  RadExt trace;
  bool normalized = false;              // false when Tr R = 0
  std::vector<RadExt> char_poly_normalized;  // ascending; raw char poly if not normalized
  RadExt a2;                            // λ^{N-2} coefficient of the normalized poly
  bool diagonalizable = false;          // over C
};
CurvatureReport curvature_invariants(const MetricLieAlgebra& L);

/// Conservative comparison: distinguishable when a2 or diagonalizability
/// differ; equality of these invariants does not prove isometry.
bool distinguishable(const CurvatureReport& x, const CurvatureReport& y);

}  // namespace solvclass
