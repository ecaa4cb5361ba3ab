#include "solvclass/linalg.hpp"

namespace solvclass {

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatVec RatMatrix::apply(const RatVec& x) const {
  RatVec y(rows, Rational(0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) y[r] += at(r, c) * x[c];
  return y;
}

F2Vec F2Matrix::apply(const F2Vec& x) const {
  F2Vec y(rows, 0);
  for (int r = 0; r < rows; ++r) {
    std::uint8_t s = 0;
    for (int c = 0; c < cols; ++c) s ^= (at(r, c) & x[c]);
    y[r] = s;
  }
  return y;
}

namespace {

// Reduced row echelon form in place; pivoting is leftmost nonzero column,
// smallest row index. Returns pivot columns.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
    Rational inv = Rational(1) / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<int> f2_rref(F2Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col)) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || !m.at(r, col)) continue;
      for (int c = col; c < m.cols; ++c) m.at(r, c) ^= m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatAffineSet> solve_affine(const RatMatrix& m, const RatVec& b) {
  RatMatrix aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  RatAffineSet out;
  out.particular.assign(m.cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    out.particular[pivots[i]] = aug.at(static_cast<int>(i), m.cols);
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -aug.at(static_cast<int>(i), free);
    out.basis.push_back(std::move(v));
  }
  return out;
}

std::vector<F2Vec> f2_kernel_basis(const F2Matrix& m) {
  F2Matrix r = m;
  std::vector<int> pivots = f2_rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<F2Vec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    F2Vec v(m.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = r.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<F2AffineSet> f2_solve_affine(const F2Matrix& m, const F2Vec& b) {
  F2Matrix aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  std::vector<int> pivots = f2_rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  F2AffineSet out;
  out.particular.assign(m.cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    out.particular[pivots[i]] = aug.at(static_cast<int>(i), m.cols);
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    F2Vec v(m.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = aug.at(static_cast<int>(i), free);
    out.basis.push_back(std::move(v));
  }
  return out;
}

std::vector<F2Vec> F2AffineSet::enumerate() const {
  std::vector<F2Vec> all;
  std::size_t count = std::size_t(1) << basis.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    F2Vec v = particular;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] ^= basis[i][c];
    }
    all.push_back(std::move(v));
  }
  return all;
}

F2Vec logsign(const std::vector<RadExt>& v) {
  F2Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    int s = v[i].sign();
    if (s == 0) throw std::domain_error("logsign of zero entry");
    out[i] = s < 0 ? 1 : 0;
  }
  return out;
}

F2Vec logsign(const RatVec& v) {
  F2Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) throw std::domain_error("logsign of zero entry");
    out[i] = v[i] < 0 ? 1 : 0;
  }
  return out;
}

}  // namespace solvclass
