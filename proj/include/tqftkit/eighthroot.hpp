#pragma once

#include <complex>
#include <string>

#include "tqftkit/cyclotomic.hpp"
#include "tqftkit/rational.hpp"

namespace tqftkit {

// Closed form r * sqrt(m) * zeta8^s with r a positive rational, m squarefree,
// s in Z/8. The sqrt exponent e is 0 or 1 and forced to 0 when m == 1, so
// each representable value has exactly one normal form.
struct EighthRootForm {
  Rat r;
  long m = 1;
  int e = 0;
  int s = 0;

  CycloValue expand() const;
  std::complex<double> to_complex() const;
  std::string str() const;

  bool operator==(const EighthRootForm& o) const {
    return r == o.r && m == o.m && e == o.e && s == o.s;
  }
};

EighthRootForm make_eighth_root(const Rat& r, long m, int e, int s);

// Recognizes a nonzero cyclotomic value as r * sqrt(m) * zeta8^s.
// Throws NotEighthRootForm when the value is zero or not of this shape.
EighthRootForm recognize_eighth_root(const CycloValue& x);

}  // namespace tqftkit
