#include "tqftkit/ratmat.hpp"

#include <algorithm>

#include "tqftkit/error.hpp"

namespace tqftkit {

QMat qmat_identity(long n) {
  QMat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat qmat_transpose(const QMat& m) {
  QMat t(m.cols, m.rows);
  for (long r = 0; r < m.rows; ++r)
    for (long c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

QMat qmat_mul(const QMat& x, const QMat& y) {
  require(x.cols == y.rows, "ShapeMismatch", "matrix product shape");
  QMat out(x.rows, y.cols);
  for (long r = 0; r < x.rows; ++r)
    for (long k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(r, k);
      if (v == 0) continue;
      for (long c = 0; c < y.cols; ++c) out.at(r, c) += v * y.at(k, c);
    }
  return out;
}

std::vector<Rat> qmat_apply(const QMat& m, const std::vector<Rat>& v) {
  require(static_cast<long>(v.size()) == m.cols, "ShapeMismatch", "matrix-vector shape");
  std::vector<Rat> out(static_cast<std::size_t>(m.rows), Rat(0));
  for (long r = 0; r < m.rows; ++r)
    for (long c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0) out[r] += m.at(r, c) * v[c];
  return out;
}

Rat qmat_det(const QMat& m) {
  require(m.rows == m.cols, "ShapeMismatch", "determinant of non-square matrix");
  QMat w = m;
  long n = w.rows;
  Rat det(1);
  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long r = col; r < n; ++r)
      if (w.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (long c = col; c < n; ++c) std::swap(w.at(piv, c), w.at(col, c));
      det = -det;
    }
    det *= w.at(col, col);
    for (long r = col + 1; r < n; ++r) {
      if (w.at(r, col) == 0) continue;
      Rat f = w.at(r, col) / w.at(col, col);
      for (long c = col; c < n; ++c) w.at(r, c) -= f * w.at(col, c);
    }
  }
  det.canonicalize();
  return det;
}

namespace {

// Row-reduces [m | aug] in place; returns pivot columns of m.
std::vector<long> row_reduce(QMat& m, QMat* aug) {
  std::vector<long> pivots;
  long lead = 0;
  for (long col = 0; col < m.cols && lead < m.rows; ++col) {
    long piv = -1;
    for (long r = lead; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead) {
      for (long c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(lead, c));
      if (aug)
        for (long c = 0; c < aug->cols; ++c) std::swap(aug->at(piv, c), aug->at(lead, c));
    }
    Rat inv = Rat(1) / m.at(lead, col);
    for (long c = 0; c < m.cols; ++c) m.at(lead, c) *= inv;
    if (aug)
      for (long c = 0; c < aug->cols; ++c) aug->at(lead, c) *= inv;
    for (long r = 0; r < m.rows; ++r) {
      if (r == lead || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (long c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(lead, c);
      if (aug)
        for (long c = 0; c < aug->cols; ++c) aug->at(r, c) -= f * aug->at(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

}  // namespace

QMat qmat_inverse(const QMat& m) {
  require(m.rows == m.cols, "ShapeMismatch", "inverse of non-square matrix");
  QMat w = m;
  QMat aug = qmat_identity(m.rows);
  std::vector<long> pivots = row_reduce(w, &aug);
  require(static_cast<long>(pivots.size()) == m.rows, "SingularMatrix",
          "matrix is not invertible");
  return aug;
}

std::vector<Rat> qmat_solve(const QMat& m, const std::vector<Rat>& rhs) {
  require(m.rows == m.cols, "ShapeMismatch", "solve with non-square matrix");
  require(static_cast<long>(rhs.size()) == m.rows, "ShapeMismatch", "solve rhs length");
  QMat w = m;
  QMat aug(m.rows, 1);
  for (long r = 0; r < m.rows; ++r) aug.at(r, 0) = rhs[r];
  std::vector<long> pivots = row_reduce(w, &aug);
  require(static_cast<long>(pivots.size()) == m.rows, "SingularMatrix",
          "solve with singular matrix");
  std::vector<Rat> out(static_cast<std::size_t>(m.rows));
  for (long r = 0; r < m.rows; ++r) out[r] = aug.at(r, 0);
  return out;
}

QMat qmat_nullspace(const QMat& m) {
  QMat w = m;
  std::vector<long> pivots = row_reduce(w, nullptr);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
  for (long p : pivots) is_pivot[p] = true;
  std::vector<long> free_cols;
  for (long c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMat basis(m.cols, static_cast<long>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    long fc = free_cols[k];
    basis.at(fc, static_cast<long>(k)) = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      basis.at(pivots[pi], static_cast<long>(k)) = -w.at(static_cast<long>(pi), fc);
  }
  return basis;
}

std::pair<int, int> qmat_inertia_symmetric(const QMat& m) {
  require(m.rows == m.cols, "ShapeMismatch", "inertia of non-square matrix");
  QMat w = m;
  std::vector<long> idx(static_cast<std::size_t>(m.rows));
  for (long i = 0; i < m.rows; ++i) idx[static_cast<std::size_t>(i)] = i;
  int pos = 0, neg = 0;

  auto erase_idx = [&](long v) { idx.erase(std::find(idx.begin(), idx.end(), v)); };

  while (!idx.empty()) {
    long diag = -1;
    for (long i : idx)
      if (w.at(i, i) != 0) {
        diag = i;
        break;
      }
    if (diag >= 0) {
      const Rat d = w.at(diag, diag);
      (sgn(d) > 0 ? pos : neg) += 1;
      for (long r : idx) {
        if (r == diag) continue;
        for (long c : idx) {
          if (c == diag) continue;
          w.at(r, c) -= w.at(r, diag) * w.at(diag, c) / d;
        }
      }
      erase_idx(diag);
      continue;
    }
    // Every remaining diagonal entry is zero: either the block vanishes,
    // or an off-diagonal pair forms a hyperbolic plane contributing (+1, -1).
    long bi = -1, bj = -1;
    for (std::size_t s = 0; s < idx.size() && bi < 0; ++s)
      for (std::size_t t = s + 1; t < idx.size(); ++t)
        if (w.at(idx[s], idx[t]) != 0) {
          bi = idx[s];
          bj = idx[t];
          break;
        }
    if (bi < 0) break;
    const Rat b = w.at(bi, bj);
    ++pos;
    ++neg;
    for (long r : idx) {
      if (r == bi || r == bj) continue;
      for (long c : idx) {
        if (c == bi || c == bj) continue;
        w.at(r, c) -= (w.at(r, bi) * w.at(bj, c) + w.at(r, bj) * w.at(bi, c)) / b;
      }
    }
    erase_idx(bi);
    erase_idx(bj);
  }
  return {pos, neg};
}

}  // namespace tqftkit
