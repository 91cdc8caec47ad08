#include "tqftkit/eighthroot.hpp"

#include <sstream>

#include "tqftkit/error.hpp"

namespace tqftkit {

CycloValue EighthRootForm::expand() const {
  CycloValue v = CycloValue::from_rational(r);
  if (e == 1) v = v * sqrt_of_integer(m);
  if (s != 0) v = v * CycloValue::root_of_unity(8, s);
  return v;
}

std::complex<double> EighthRootForm::to_complex() const { return expand().to_complex(); }

std::string EighthRootForm::str() const {
  std::ostringstream os;
  os << rat_str(r);
  if (e == 1) os << "*sqrt(" << m << ")";
  if (s != 0) os << "*z8^" << s;
  return os.str();
}

EighthRootForm make_eighth_root(const Rat& r, long m, int e, int s) {
  require(sgn(r) > 0, "NotEighthRootForm", "scale must be positive");
  auto [sf, cof] = squarefree_split(m);
  require(cof == 1 && sf == m, "NotEighthRootForm", "radicand must be squarefree");
  require(e == 0 || e == 1, "NotEighthRootForm", "sqrt exponent must be 0 or 1");
  if (m == 1) e = 0;
  if (e == 0) m = 1;
  s = ((s % 8) + 8) % 8;
  return EighthRootForm{r, m, e, s};
}

EighthRootForm recognize_eighth_root(const CycloValue& x) {
  require(!x.is_zero(), "NotEighthRootForm", "zero has no eighth-root form");
  CycloValue n2 = x.norm_squared();
  require(n2.is_rational(), "NotEighthRootForm", "|x|^2 is irrational");
  const Rat R = n2.rational_value();
  require(sgn(R) > 0, "NotEighthRootForm", "|x|^2 not positive");

  // R = a/b in lowest terms; a*b = c^2 * m with m squarefree, so
  // |x| = sqrt(R) = (c/b) * sqrt(m) exactly.
  const Int a = R.get_num(), b = R.get_den();
  const long ab = to_ll(a * b);
  auto [m, c] = squarefree_split(ab);
  Rat r(Int(c), b);
  r.canonicalize();

  const CycloValue mag =
      (m == 1) ? CycloValue::from_rational(r) : CycloValue::from_rational(r) * sqrt_of_integer(m);
  for (int s = 0; s < 8; ++s) {
    CycloValue cand = (s == 0) ? mag : mag * CycloValue::root_of_unity(8, s);
    if (cand == x) return EighthRootForm{r, m, m == 1 ? 0 : 1, s};
  }
  fail("NotEighthRootForm", "value " + x.str() + " is not r*sqrt(m)*zeta8^s");
}

}  // namespace tqftkit
