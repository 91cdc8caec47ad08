#include "tqftkit/cycmat.hpp"

#include "tqftkit/error.hpp"

namespace tqftkit {

bool operator==(const CMat& a, const CMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t i = 0; i < a.a.size(); ++i)
    if (!(a.a[i] == b.a[i])) return false;
  return true;
}

CMat cmat_identity(long n) {
  CMat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = CycloValue::one();
  return m;
}

CMat cmat_mul(const CMat& x, const CMat& y) {
  require(x.cols == y.rows, "ShapeMismatch", "matrix product shape");
  CMat out(x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k) {
      const CycloValue& xv = x.at(i, k);
      if (xv.is_zero()) continue;
      for (long j = 0; j < y.cols; ++j) {
        if (y.at(k, j).is_zero()) continue;
        out.at(i, j) = out.at(i, j) + xv * y.at(k, j);
      }
    }
  return out;
}

std::vector<CycloValue> cmat_apply(const CMat& m, const std::vector<CycloValue>& v) {
  require(static_cast<long>(v.size()) == m.cols, "ShapeMismatch", "matrix apply shape");
  std::vector<CycloValue> out(m.rows);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) {
      if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] = out[i] + m.at(i, j) * v[j];
    }
  return out;
}

CMat cmat_scaled(const CMat& m, const CycloValue& s) {
  CMat out = m;
  for (auto& e : out.a) e = e * s;
  return out;
}

CMat cmat_add(const CMat& x, const CMat& y) {
  require(x.rows == y.rows && x.cols == y.cols, "ShapeMismatch", "matrix sum shape");
  CMat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = out.a[i] + y.a[i];
  return out;
}

CycloValue cmat_trace(const CMat& m) {
  require(m.rows == m.cols, "ShapeMismatch", "trace of non-square matrix");
  CycloValue t;
  for (long i = 0; i < m.rows; ++i) t = t + m.at(i, i);
  return t;
}

CMat cmat_inverse(const CMat& m) {
  require(m.rows == m.cols, "ShapeMismatch", "inverse of non-square matrix");
  long n = m.rows;
  CMat w = m;
  CMat inv = cmat_identity(n);
  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long r = col; r < n; ++r)
      if (!w.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    require(piv >= 0, "SingularMatrix", "matrix is singular");
    if (piv != col)
      for (long j = 0; j < n; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    CycloValue scale = w.at(col, col).inverse();
    for (long j = 0; j < n; ++j) {
      w.at(col, j) = w.at(col, j) * scale;
      inv.at(col, j) = inv.at(col, j) * scale;
    }
    for (long r = 0; r < n; ++r) {
      if (r == col || w.at(r, col).is_zero()) continue;
      CycloValue f = w.at(r, col);
      for (long j = 0; j < n; ++j) {
        w.at(r, j) = w.at(r, j) - f * w.at(col, j);
        inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::vector<long> cmat_rref(CMat& m) {
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < m.cols && row < m.rows; ++col) {
    long piv = -1;
    for (long r = row; r < m.rows; ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (long j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    CycloValue scale = m.at(row, col).inverse();
    for (long j = 0; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * scale;
    for (long r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      CycloValue f = m.at(r, col);
      for (long j = 0; j < m.cols; ++j) m.at(r, j) = m.at(r, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace tqftkit
