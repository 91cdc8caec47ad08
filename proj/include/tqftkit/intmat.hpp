#pragma once

#include <vector>

#include "tqftkit/ratmat.hpp"
#include "tqftkit/rational.hpp"

namespace tqftkit {

// Dense matrix over Z.
struct ZMat {
  long rows = 0;
  long cols = 0;
  std::vector<Int> a;

  ZMat() = default;
  ZMat(long r, long c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Int(0)) {}

  Int& at(long r, long c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(long r, long c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const ZMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

ZMat zmat_identity(long n);
ZMat zmat_transpose(const ZMat& m);
ZMat zmat_mul(const ZMat& x, const ZMat& y);
std::vector<Int> zmat_apply(const ZMat& m, const std::vector<Int>& v);
bool zmat_is_symmetric(const ZMat& m);

QMat qmat_from(const ZMat& m);
Int zmat_det(const ZMat& m);
ZMat zmat_direct_sum(const ZMat& a, const ZMat& b);

// Converts back from an exact rational matrix whose entries are integers.
ZMat zmat_from_integral(const QMat& m);

// Smith normal form: u * m * v = d with u, v unimodular and d diagonal,
// nonnegative, each entry dividing the next (zeros sorted last).
struct SmithResult {
  ZMat u;
  ZMat d;
  ZMat v;
};

SmithResult smith_normal_form(const ZMat& m);

}  // namespace tqftkit
