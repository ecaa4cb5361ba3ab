#include "solvclass/geometry.hpp"

#include <algorithm>

namespace solvclass {

RadMatrix RadMatrix::identity(int n) {
  RadMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RadExt(1);
  return m;
}

RadExt RadMatrix::trace() const {
  RadExt t;
  for (int i = 0; i < rows; ++i) t += at(i, i);
  return t;
}

bool RadMatrix::is_zero() const {
  for (const RadExt& v : a)
    if (!v.is_zero()) return false;
  return true;
}

RadMatrix operator*(const RadMatrix& x, const RadMatrix& y) {
  RadMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const RadExt& v = x.at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j).is_zero()) continue;
        r.at(i, j) += v * y.at(k, j);
      }
    }
  return r;
}

RadMatrix operator+(const RadMatrix& x, const RadMatrix& y) {
  RadMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

RadMatrix operator-(const RadMatrix& x, const RadMatrix& y) {
  RadMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

RadMatrix operator*(const RadExt& s, const RadMatrix& x) {
  RadMatrix r = x;
  for (RadExt& v : r.a) v *= s;
  return r;
}

void RadPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

RadPoly RadPoly::derivative() const {
  RadPoly d;
  for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(Rational(static_cast<int>(i)) * c[i]);
  d.trim();
  return d;
}

RadPoly RadPoly::monic() const {
  RadPoly m = *this;
  m.trim();
  if (m.is_zero()) return m;
  RadExt inv = m.c.back().inverse();
  for (RadExt& v : m.c) v *= inv;
  return m;
}

RadMatrix RadPoly::eval(const RadMatrix& m) const {
  RadMatrix acc(m.rows, m.cols);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (int i = 0; i < m.rows; ++i) acc.at(i, i) += *it;
  }
  return acc;
}

RadPoly operator*(const RadPoly& p, const RadPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  RadPoly r;
  r.c.assign(p.c.size() + q.c.size() - 1, RadExt());
  for (std::size_t i = 0; i < p.c.size(); ++i)
    for (std::size_t j = 0; j < q.c.size(); ++j) r.c[i + j] += p.c[i] * q.c[j];
  r.trim();
  return r;
}

RadPoly operator-(const RadPoly& p, const RadPoly& q) {
  RadPoly r = p;
  if (r.c.size() < q.c.size()) r.c.resize(q.c.size());
  for (std::size_t i = 0; i < q.c.size(); ++i) r.c[i] -= q.c[i];
  r.trim();
  return r;
}

std::pair<RadPoly, RadPoly> poly_divmod(const RadPoly& p, const RadPoly& d) {
  RadPoly rem = p;
  rem.trim();
  RadPoly div = d;
  div.trim();
  if (div.is_zero()) throw std::domain_error("polynomial division by zero");
  RadPoly quot;
  quot.c.assign(std::max<std::size_t>(rem.c.size(), 1), RadExt());
  RadExt lead_inv = div.c.back().inverse();
  while (!rem.is_zero() && rem.degree() >= div.degree()) {
    int shift = rem.degree() - div.degree();
    RadExt f = rem.c.back() * lead_inv;
    quot.c[shift] += f;
    for (int i = 0; i <= div.degree(); ++i) rem.c[shift + i] -= f * div.c[i];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

RadPoly poly_gcd(RadPoly p, RadPoly q) {
  p.trim();
  q.trim();
  while (!q.is_zero()) {
    RadPoly r = poly_divmod(p, q).second;
    p = std::move(q);
    q = std::move(r);
    q = q.monic();  // keeps coefficient growth in check
  }
  return p.monic();
}

RadPoly char_poly(const RadMatrix& m) {
  int n = m.rows;
  RadPoly chi;
  chi.c.assign(n + 1, RadExt());
  chi.c[n] = RadExt(1);
  RadMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    RadExt ck = Rational(-1, k) * mk.trace();
    chi.c[n - k] = ck;
    if (k == n) break;
    for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
    mk = m * mk;
  }
  return chi;
}

MetricLieAlgebra::MetricLieAlgebra(int n, RatVec metric)
    : n_(n), c_(static_cast<std::size_t>(n) * n * n), metric_(std::move(metric)) {
  if (static_cast<int>(metric_.size()) != n) throw std::invalid_argument("metric size mismatch");
  for (const Rational& g : metric_)
    if (g == 0) throw std::invalid_argument("degenerate metric entry");
}

void MetricLieAlgebra::set_bracket(int i, int j, int k, const RadExt& v) {
  if (i == j) throw std::invalid_argument("bracket [e_i,e_i]");
  c_[((static_cast<std::size_t>(i) - 1) * n_ + (j - 1)) * n_ + (k - 1)] = v;
  c_[((static_cast<std::size_t>(j) - 1) * n_ + (i - 1)) * n_ + (k - 1)] = -v;
}

MetricLieAlgebra MetricLieAlgebra::from_diagram(const NiceDiagram& d, const RadVec& c_per_class,
                                                RatVec metric) {
  MetricLieAlgebra L(d.n(), std::move(metric));
  const auto& classes = d.arrow_classes();
  for (std::size_t idx = 0; idx < classes.size(); ++idx)
    L.set_bracket(classes[idx].i, classes[idx].j, classes[idx].k, c_per_class[idx]);
  return L;
}

RadVec MetricLieAlgebra::bracket(const RadVec& x, const RadVec& y) const {
  RadVec out(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      if (i == j) continue;
      RadExt f = x[i - 1] * y[j - 1];
      if (f.is_zero()) continue;
      for (int k = 1; k <= n_; ++k) {
        if (c(i, j, k).is_zero()) continue;
        out[k - 1] += f * c(i, j, k);
      }
    }
  return out;
}

std::optional<JacobiFailure> jacobi_check(const MetricLieAlgebra& L) {
  int n = L.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int m = 1; m <= n; ++m) {
          RadExt sum;
          for (int p = 1; p <= n; ++p) {
            if (!L.c(i, j, p).is_zero() && p != k) sum += L.c(i, j, p) * L.c(p, k, m);
            if (!L.c(j, k, p).is_zero() && p != i) sum += L.c(j, k, p) * L.c(p, i, m);
            if (!L.c(k, i, p).is_zero() && p != j) sum += L.c(k, i, p) * L.c(p, j, m);
          }
          if (!sum.is_zero()) return JacobiFailure{i, j, k};
        }
  return std::nullopt;
}

std::optional<DerivationFailure> is_derivation(const MetricLieAlgebra& L, const RadMatrix& D) {
  int n = L.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      for (int u = 1; u <= n; ++u) {
        RadExt lhs;
        for (int k = 1; k <= n; ++k)
          if (!L.c(i, j, k).is_zero()) lhs += L.c(i, j, k) * D.at(u - 1, k - 1);
        RadExt rhs;
        for (int s = 1; s <= n; ++s) {
          if (!D.at(s - 1, i - 1).is_zero() && s != j) rhs += D.at(s - 1, i - 1) * L.c(s, j, u);
          if (!D.at(s - 1, j - 1).is_zero() && s != i) rhs += D.at(s - 1, j - 1) * L.c(i, s, u);
        }
        if (lhs != rhs) return DerivationFailure{i, j};
      }
    }
  return std::nullopt;
}

RadVec ricci_diagonal(const NiceDiagram& d, const RadVec& c_per_class, const RatVec& metric) {
  RatVec eg = d.exp_root_action(metric);
  std::vector<RadExt> x;
  x.reserve(c_per_class.size());
  for (std::size_t idx = 0; idx < c_per_class.size(); ++idx)
    x.push_back(c_per_class[idx] * c_per_class[idx] * RadExt(eg[idx]));
  RatMatrix m = d.root_matrix();
  RadVec ric(d.n());
  for (int u = 0; u < d.n(); ++u) {
    RadExt s;
    for (int r = 0; r < m.rows; ++r)
      if (m.at(r, u) != 0) s += RadExt(m.at(r, u)) * x[r];
    ric[u] = Rational(1, 2) * s;
  }
  return ric;
}

namespace {

// Christoffel symbols of a diagonal metric from the Koszul formula:
// 2 <∇_{e_i} e_j, e_k> = <[e_i,e_j],e_k> - <[e_j,e_k],e_i> + <[e_k,e_i],e_j>.
std::vector<RadExt> christoffel(const MetricLieAlgebra& L) {
  int n = L.n();
  const RatVec& g = L.metric();
  std::vector<RadExt> gamma(static_cast<std::size_t>(n) * n * n);
  auto at = [&](int i, int j, int k) -> RadExt& {
    return gamma[((static_cast<std::size_t>(i) - 1) * n + (j - 1)) * n + (k - 1)];
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        RadExt v = RadExt(g[k - 1]) * L.c(i, j, k) - RadExt(g[i - 1]) * L.c(j, k, i) +
                   RadExt(g[j - 1]) * L.c(k, i, j);
        at(i, j, k) = Rational(1, 2) / Rational(g[k - 1]) * v;
      }
  return gamma;
}

// Full curvature operator components: R(e_i,e_j)e_k = sum_l comp[l] e_l with
// R(X,Y) = ∇_X ∇_Y - ∇_Y ∇_X - ∇_{[X,Y]}.
struct CurvatureTensor {
  int n;
  std::vector<RadExt> r;  // index (i,j,k,l), 1-based
  const RadExt& at(int i, int j, int k, int l) const {
    return r[(((static_cast<std::size_t>(i) - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1)];
  }
};

CurvatureTensor curvature_components(const MetricLieAlgebra& L) {
  int n = L.n();
  std::vector<RadExt> gamma = christoffel(L);
  auto G = [&](int i, int j, int k) -> const RadExt& {
    return gamma[((static_cast<std::size_t>(i) - 1) * n + (j - 1)) * n + (k - 1)];
  };
  CurvatureTensor R{n, std::vector<RadExt>(static_cast<std::size_t>(n) * n * n * n)};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          RadExt v;
          for (int m = 1; m <= n; ++m) {
            v += G(j, k, m) * G(i, m, l);
            v -= G(i, k, m) * G(j, m, l);
            if (!L.c(i, j, m).is_zero()) v -= L.c(i, j, m) * G(m, k, l);
          }
          R.r[(((static_cast<std::size_t>(i) - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1)] = v;
        }
  return R;
}

}  // namespace

RadMatrix ricci_general(const MetricLieAlgebra& L) {
  int n = L.n();
  CurvatureTensor R = curvature_components(L);
  // ric(x,y) = tr(z -> R(z,x)y); operator via raising with the diagonal metric.
  RadMatrix ric(n, n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      RadExt s;
      for (int i = 1; i <= n; ++i) s += R.at(i, j, k, i);
      ric.at(j - 1, k - 1) = Rational(1) / Rational(L.metric()[j - 1]) * s;
    }
  return ric;
}

namespace {

RadMatrix metric_adjoint(const RadMatrix& D, const RatVec& g) {
  int n = D.rows;
  RadMatrix adj(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) adj.at(r, c) = Rational(g[c]) / Rational(g[r]) * D.at(c, r);
  return adj;
}

}  // namespace

bool NilsolitonResidual::ok() const {
  if (!ricci_residual.is_zero()) return false;
  for (const RadExt& v : ad_trace_residual)
    if (!v.is_zero()) return false;
  return true;
}

NilsolitonResidual check_generalized_nilsoliton(const MetricLieAlgebra& L, const RadMatrix& D) {
  int n = L.n();
  RadMatrix Dstar = metric_adjoint(D, L.metric());
  RadMatrix Ds = Rational(1, 2) * (D + Dstar);
  RadMatrix comm = D * Dstar - Dstar * D;
  RadExt tr_ds2 = (Ds * Ds).trace();
  RadExt tr_d = D.trace();

  RadMatrix rhs = (-tr_ds2) * RadMatrix::identity(n) - Rational(1, 2) * comm + tr_d * Ds;
  NilsolitonResidual res{ricci_general(L) - rhs, RadVec(n)};
  for (int b = 1; b <= n; ++b) {
    RadExt t;
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        // (ad e_b)(j,k) = c(b,k,j)
        if (!L.c(b, k, j).is_zero()) t += L.c(b, k, j) * Dstar.at(k - 1, j - 1);
      }
    res.ad_trace_residual[b - 1] = t;
  }
  return res;
}

MetricLieAlgebra extend(const MetricLieAlgebra& L, const RadMatrix& D) {
  int n = L.n();
  RatVec metric = L.metric();
  metric.push_back(Rational(1));
  MetricLieAlgebra ext(n + 1, metric);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (!L.c(i, j, k).is_zero()) ext.set_bracket(i, j, k, L.c(i, j, k));
  for (int i = 1; i <= n; ++i)
    for (int u = 1; u <= n; ++u)
      if (!D.at(u - 1, i - 1).is_zero()) ext.set_bracket(n + 1, i, u, D.at(u - 1, i - 1));
  return ext;
}

EinsteinOutcome einstein_check(const MetricLieAlgebra& L) {
  RadMatrix ric = ricci_general(L);
  EinsteinOutcome out;
  out.lambda = ric.at(0, 0);
  for (int r = 0; r < ric.rows; ++r)
    for (int c = 0; c < ric.cols; ++c) {
      const RadExt& want = (r == c) ? out.lambda : RadExt();
      if (ric.at(r, c) != want) {
        out.einstein = false;
        out.row = r + 1;
        out.col = c + 1;
        return out;
      }
    }
  out.einstein = true;
  return out;
}

CurvatureReport curvature_invariants(const MetricLieAlgebra& L) {
  int n = L.n();
  CurvatureTensor R = curvature_components(L);
  const RatVec& g = L.metric();

  std::vector<std::pair<int, int>> basis;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) basis.push_back({i, j});
  int N = static_cast<int>(basis.size());

  // <R(e_i ∧ e_j), e_k ∧ e_l> = <R(e_i,e_j)e_k, e_l>, raised with the induced
  // metric <e^{kl}, e^{kl}> = g_k g_l; entry (kl),(ij) is the e_l-component of
  // R(e_i,e_j)e_k divided by g_k.
  RadMatrix op(N, N);
  for (int col = 0; col < N; ++col) {
    auto [i, j] = basis[col];
    for (int row = 0; row < N; ++row) {
      auto [k, l] = basis[row];
      op.at(row, col) = Rational(1) / Rational(g[k - 1]) * R.at(i, j, k, l);
    }
  }

  CurvatureReport rep;
  rep.riemann_op = op;
  rep.trace = op.trace();
  RadPoly chi = char_poly(op);
  if (rep.trace.is_zero()) {
    rep.normalized = false;
    rep.char_poly_normalized = chi.c;
  } else {
    rep.normalized = true;
    RadExt t_inv = rep.trace.inverse();
    RadPoly norm;
    norm.c.resize(chi.c.size());
    RadExt power(1);
    for (int k = 0; k <= N; ++k) {
      norm.c[N - k] = chi.c[N - k] * power;  // coeff of λ^{N-k} divides by T^k
      power *= t_inv;
    }
    rep.char_poly_normalized = norm.c;
    rep.a2 = N >= 2 ? rep.char_poly_normalized[N - 2] : RadExt();
  }

  // Diagonalizable over C iff the squarefree part of χ annihilates the matrix.
  RadPoly gcd = poly_gcd(chi, chi.derivative());
  RadPoly squarefree = poly_divmod(chi, gcd).first;
  rep.diagonalizable = squarefree.eval(op).is_zero();
  return rep;
}

bool distinguishable(const CurvatureReport& x, const CurvatureReport& y) {
  if (x.diagonalizable != y.diagonalizable) return true;
  if (x.normalized && y.normalized) return x.a2 != y.a2;
  if (x.normalized != y.normalized) return true;
  return x.char_poly_normalized != y.char_poly_normalized;
}

}  // namespace solvclass
