#pragma once

#include <vector>

#include "tqftkit/cyclotomic.hpp"

namespace tqftkit {

// Dense matrix over the cyclotomic field tower.
struct CMat {
  long rows = 0;
  long cols = 0;
  std::vector<CycloValue> a;

  CMat() = default;
  CMat(long r, long c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  CycloValue& at(long r, long c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const CycloValue& at(long r, long c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
};

bool operator==(const CMat& a, const CMat& b);

CMat cmat_identity(long n);
CMat cmat_mul(const CMat& x, const CMat& y);
std::vector<CycloValue> cmat_apply(const CMat& m, const std::vector<CycloValue>& v);
CMat cmat_scaled(const CMat& m, const CycloValue& s);
CMat cmat_add(const CMat& x, const CMat& y);
CycloValue cmat_trace(const CMat& m);

// Gauss-Jordan over exact cyclotomics; throws SingularMatrix.
CMat cmat_inverse(const CMat& m);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<long> cmat_rref(CMat& m);

}  // namespace tqftkit
