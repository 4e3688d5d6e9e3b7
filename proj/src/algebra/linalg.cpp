#include "bethe/algebra/linalg.hpp"

#include <stdexcept>

namespace bethe {

RowEchelon rref(Matrix m) {
  RowEchelon out;
  int rows = int(m.size());
  int cols = rows ? int(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Scalar inv = m[r][c].inverse();
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (int j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.m = std::move(m);
  return out;
}

int rank(const Matrix& m) { return int(rref(m).pivots.size()); }

std::vector<std::vector<Scalar>> kernel(const Matrix& m, int cols) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols);
    v[free] = Scalar(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b, int cols) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
  Matrix aug = a;
  for (size_t i = 0; i < aug.size(); ++i) {
    aug[i].resize(cols);
    aug[i].push_back(b[i]);
  }
  RowEchelon e = rref(std::move(aug));
  LinearSolution out;
  if (!e.pivots.empty() && e.pivots.back() == cols) return out;
  out.consistent = true;
  out.particular.assign(cols, Scalar());
  for (size_t r = 0; r < e.pivots.size(); ++r) out.particular[e.pivots[r]] = e.m[r][cols];
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols);
    v[free] = Scalar(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.m[r][free];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

Scalar determinant(Matrix m) {
  int n = int(m.size());
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar();
    if (piv != c) {
      std::swap(m[c], m[piv]);
      det = -det;
    }
    det *= m[c][c];
    Scalar inv = m[c][c].inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] * inv;
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

Poly determinant(std::vector<std::vector<Poly>> m) {
  int n = int(m.size());
  if (n == 0) return Poly(1);
  if (n == 1) return m[0][0];
  bool negate = false;
  Poly prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return Poly();
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Poly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = prev.is_one() ? v : v.exact_div(prev);
      }
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

RatFunc determinant(const std::vector<std::vector<RatFunc>>& m) {
  int n = int(m.size());
  std::vector<std::vector<Poly>> pm(n, std::vector<Poly>(n));
  Poly scale(1);
  for (int j = 0; j < n; ++j) {
    Poly l(1);
    for (int i = 0; i < n; ++i)
      if (!m[i][j].den().is_one()) l = lcm(l, m[i][j].den());
    for (int i = 0; i < n; ++i) pm[i][j] = m[i][j].num() * l.exact_div(m[i][j].den());
    scale *= l;
  }
  return RatFunc(determinant(std::move(pm)), scale);
}

}  // namespace bethe
