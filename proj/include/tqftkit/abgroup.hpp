#pragma once

#include <vector>

#include "tqftkit/intmat.hpp"
#include "tqftkit/phase.hpp"

namespace tqftkit {

// Group element as a coordinate vector, one entry per cyclic factor.
using Elem = std::vector<long long>;

// Finite abelian group in invariant-factor form: Z/d1 x ... x Z/dk with
// 1 < d1 | d2 | ... | dk. The trivial group has no factors.
struct FinAbGroup {
  std::vector<long long> factors;

  static FinAbGroup create(std::vector<long long> factors);
  static FinAbGroup trivial() { return FinAbGroup{}; }

  long rank() const { return static_cast<long>(factors.size()); }
  long long order() const;
  Elem zero() const { return Elem(factors.size(), 0); }
  Elem reduce(Elem x) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem scale(long long k, const Elem& x) const;
  bool is_zero(const Elem& x) const;

  // Enumeration order: first coordinate varies slowest.
  long long index_of(const Elem& x) const;
  Elem element_at(long long idx) const;

  bool operator==(const FinAbGroup& o) const { return factors == o.factors; }
  bool operator!=(const FinAbGroup& o) const { return !(*this == o); }
};

// Homomorphism between finite abelian groups, acting on coordinates by an
// integer matrix (cod.rank x dom.rank), reduced in the codomain.
struct GroupHom {
  FinAbGroup dom;
  FinAbGroup cod;
  ZMat matrix;

  Elem apply(const Elem& x) const;
};

// coker(m) = Z^n / m Z^n for square nonsingular m, together with the
// canonical projection and integer lifts of the canonical generators.
struct Cokernel {
  FinAbGroup group;
  ZMat projection;  // group.rank x n; the class of x is projection * x, reduced
  ZMat lifts;       // n x group.rank; column i is an integer lift of generator i
};

// Throws SingularMatrix when det m = 0 (infinite cokernel).
Cokernel cokernel(const ZMat& m);

// Evaluation pairing A x A^ -> Q/Z on coordinates: sum_i x_i chi_i / d_i.
PhaseQZ char_pairing(const FinAbGroup& g, const Elem& x, const Elem& chi);

}  // namespace tqftkit
