#pragma once

#include <vector>

#include "tqftkit/rational.hpp"

namespace tqftkit {

// Dense matrix over Q. Small and exact; everything here is Gaussian
// elimination at desk scale, no pivot-growth concerns.
struct QMat {
  long rows = 0;
  long cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(long r, long c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

  Rat& at(long r, long c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rat& at(long r, long c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

QMat qmat_identity(long n);
QMat qmat_transpose(const QMat& m);
QMat qmat_mul(const QMat& x, const QMat& y);
std::vector<Rat> qmat_apply(const QMat& m, const std::vector<Rat>& v);

Rat qmat_det(const QMat& m);

// Throws SingularMatrix when no inverse exists.
QMat qmat_inverse(const QMat& m);

// Solves m x = rhs for square nonsingular m; throws SingularMatrix.
std::vector<Rat> qmat_solve(const QMat& m, const std::vector<Rat>& rhs);

// Basis of the right kernel, one vector per column of the result.
QMat qmat_nullspace(const QMat& m);

// Inertia (#positive, #negative eigenvalue count) of a symmetric matrix,
// by symmetric elimination; zero eigenvalues are simply not counted.
std::pair<int, int> qmat_inertia_symmetric(const QMat& m);

}  // namespace tqftkit
