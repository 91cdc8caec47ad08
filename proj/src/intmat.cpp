#include "tqftkit/intmat.hpp"

#include <algorithm>
#include <cstdlib>

#include "tqftkit/error.hpp"

namespace tqftkit {

ZMat zmat_identity(long n) {
  ZMat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMat zmat_transpose(const ZMat& m) {
  ZMat t(m.cols, m.rows);
  for (long r = 0; r < m.rows; ++r)
    for (long c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

ZMat zmat_mul(const ZMat& x, const ZMat& y) {
  require(x.cols == y.rows, "ShapeMismatch", "matrix product shape");
  ZMat out(x.rows, y.cols);
  for (long r = 0; r < x.rows; ++r)
    for (long k = 0; k < x.cols; ++k) {
      const Int& v = x.at(r, k);
      if (v == 0) continue;
      for (long c = 0; c < y.cols; ++c) out.at(r, c) += v * y.at(k, c);
    }
  return out;
}

std::vector<Int> zmat_apply(const ZMat& m, const std::vector<Int>& v) {
  require(static_cast<long>(v.size()) == m.cols, "ShapeMismatch", "matrix-vector shape");
  std::vector<Int> out(static_cast<std::size_t>(m.rows), Int(0));
  for (long r = 0; r < m.rows; ++r)
    for (long c = 0; c < m.cols; ++c) out[r] += m.at(r, c) * v[c];
  return out;
}

bool zmat_is_symmetric(const ZMat& m) {
  if (m.rows != m.cols) return false;
  for (long r = 0; r < m.rows; ++r)
    for (long c = r + 1; c < m.cols; ++c)
      if (m.at(r, c) != m.at(c, r)) return false;
  return true;
}

ZMat zmat_direct_sum(const ZMat& a, const ZMat& b) {
  ZMat out(a.rows + b.rows, a.cols + b.cols);
  for (long i = 0; i < a.rows; ++i)
    for (long j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
  for (long i = 0; i < b.rows; ++i)
    for (long j = 0; j < b.cols; ++j) out.at(a.rows + i, a.cols + j) = b.at(i, j);
  return out;
}

QMat qmat_from(const ZMat& m) {
  QMat q(m.rows, m.cols);
  for (long r = 0; r < m.rows; ++r)
    for (long c = 0; c < m.cols; ++c) q.at(r, c) = Rat(m.at(r, c));
  return q;
}

Int zmat_det(const ZMat& m) {
  Rat d = qmat_det(qmat_from(m));
  return d.get_num();
}

ZMat zmat_from_integral(const QMat& m) {
  ZMat z(m.rows, m.cols);
  for (long r = 0; r < m.rows; ++r)
    for (long c = 0; c < m.cols; ++c) {
      require(rat_is_integer(m.at(r, c)), "ShapeMismatch",
              "expected integral matrix entry, got " + rat_str(m.at(r, c)));
      z.at(r, c) = m.at(r, c).get_num();
    }
  return z;
}

namespace {

struct SnfWork {
  ZMat a, u, v;

  void swap_rows(long i, long j) {
    if (i == j) return;
    for (long c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (long c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(long i, long j) {
    if (i == j) return;
    for (long r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (long r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void row_sub(long i, long t, const Int& q) {  // row_i -= q * row_t
    if (q == 0) return;
    for (long c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(t, c);
    for (long c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(t, c);
  }
  void col_sub(long j, long t, const Int& q) {  // col_j -= q * col_t
    if (q == 0) return;
    for (long r = 0; r < a.rows; ++r) a.at(r, j) -= q * a.at(r, t);
    for (long r = 0; r < v.rows; ++r) v.at(r, j) -= q * v.at(r, t);
  }
  void col_add(long j, long t) {  // col_j += col_t
    for (long r = 0; r < a.rows; ++r) a.at(r, j) += a.at(r, t);
    for (long r = 0; r < v.rows; ++r) v.at(r, j) += v.at(r, t);
  }
  void negate_row(long i) {
    for (long c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (long c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }

  // Reduces the trailing submatrix so position (t, t) holds its gcd and the
  // rest of row t and column t vanish. Returns false when the submatrix is 0.
  bool pivot_step(long t) {
    long pr = -1, pc = -1;
    for (;;) {
      pr = pc = -1;
      Int best;
      for (long r = t; r < a.rows; ++r)
        for (long c = t; c < a.cols; ++c) {
          if (a.at(r, c) == 0) continue;
          Int v = abs(a.at(r, c));
          if (pr < 0 || v < best) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      if (pr < 0) return false;
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = true;
      for (long r = t + 1; r < a.rows; ++r) {
        if (a.at(r, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a.at(r, t).get_mpz_t(), a.at(t, t).get_mpz_t());
        row_sub(r, t, q);
        if (a.at(r, t) != 0) clean = false;
      }
      for (long c = t + 1; c < a.cols; ++c) {
        if (a.at(t, c) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a.at(t, c).get_mpz_t(), a.at(t, t).get_mpz_t());
        col_sub(c, t, q);
        if (a.at(t, c) != 0) clean = false;
      }
      if (clean) return true;
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const ZMat& m) {
  SnfWork w{m, zmat_identity(m.rows), zmat_identity(m.cols)};
  const long k = std::min(m.rows, m.cols);

  long rank = 0;
  for (long t = 0; t < k; ++t) {
    if (!w.pivot_step(t)) break;
    ++rank;
  }

  // Enforce the divisibility chain d_t | d_{t+1}; folding the next column in
  // and re-pivoting replaces the pair with (gcd, lcm) up to re-diagonalizing.
  bool changed = true;
  while (changed) {
    changed = false;
    for (long t = 0; t + 1 < rank; ++t) {
      const Int& a = w.a.at(t, t);
      const Int& b = w.a.at(t + 1, t + 1);
      if (a == 0 || b % a == 0) continue;
      w.col_add(t, t + 1);
      for (long s = t; s < rank; ++s) w.pivot_step(s);
      changed = true;
    }
  }

  for (long t = 0; t < k; ++t)
    if (w.a.at(t, t) < 0) w.negate_row(t);

  return {w.u, w.a, w.v};
}

}  // namespace tqftkit
