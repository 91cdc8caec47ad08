#include "tqftkit/abgroup.hpp"

#include "tqftkit/error.hpp"
#include "tqftkit/rational.hpp"
#include "tqftkit/ratmat.hpp"

namespace tqftkit {

FinAbGroup FinAbGroup::create(std::vector<long long> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    require(factors[i] >= 2, "InvalidGroup", "cyclic factor must be at least 2");
    if (i + 1 < factors.size())
      require(factors[i + 1] % factors[i] == 0, "InvalidGroup",
              "invariant factors must form a divisibility chain");
  }
  return FinAbGroup{std::move(factors)};
}

long long FinAbGroup::order() const {
  Int n(1);
  for (long long d : factors) n *= Int(static_cast<long>(d));
  return to_ll(n);
}

Elem FinAbGroup::reduce(Elem x) const {
  require(x.size() == factors.size(), "ShapeMismatch", "element rank mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] %= factors[i];
    if (x[i] < 0) x[i] += factors[i];
  }
  return x;
}

Elem FinAbGroup::add(const Elem& x, const Elem& y) const {
  require(x.size() == y.size() && x.size() == factors.size(), "ShapeMismatch",
          "element rank mismatch");
  Elem z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % factors[i];
  return reduce(std::move(z));
}

Elem FinAbGroup::neg(const Elem& x) const { return scale(-1, x); }

Elem FinAbGroup::scale(long long k, const Elem& x) const {
  Elem z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = ((k % factors[i]) * (x[i] % factors[i]));
  return reduce(std::move(z));
}

bool FinAbGroup::is_zero(const Elem& x) const {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] % factors[i] != 0) return false;
  return true;
}

long long FinAbGroup::index_of(const Elem& x) const {
  Elem r = reduce(x);
  long long idx = 0;
  for (std::size_t i = 0; i < r.size(); ++i) idx = idx * factors[i] + r[i];
  return idx;
}

Elem FinAbGroup::element_at(long long idx) const {
  Elem x(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    x[i] = idx % factors[i];
    idx /= factors[i];
  }
  return x;
}

Elem GroupHom::apply(const Elem& x) const {
  require(static_cast<long>(x.size()) == dom.rank(), "ShapeMismatch", "hom argument rank");
  Elem out(static_cast<std::size_t>(cod.rank()), 0);
  for (long r = 0; r < cod.rank(); ++r) {
    Int acc(0);
    for (long c = 0; c < dom.rank(); ++c)
      acc += matrix.at(r, c) * Int(static_cast<long>(x[static_cast<std::size_t>(c)]));
    acc %= Int(static_cast<long>(cod.factors[static_cast<std::size_t>(r)]));
    out[static_cast<std::size_t>(r)] = to_ll(acc);
  }
  return cod.reduce(std::move(out));
}

Cokernel cokernel(const ZMat& m) {
  require(m.rows == m.cols, "ShapeMismatch", "cokernel of non-square matrix");
  require(zmat_det(m) != 0, "SingularMatrix", "cokernel is infinite: determinant is zero");
  SmithResult snf = smith_normal_form(m);
  ZMat uinv = zmat_from_integral(qmat_inverse(qmat_from(snf.u)));

  std::vector<long> kept;
  std::vector<long long> factors;
  for (long i = 0; i < snf.d.rows; ++i) {
    Int d = snf.d.at(i, i);
    if (d == 1) continue;
    kept.push_back(i);
    factors.push_back(to_ll(d));
  }
  const long k = static_cast<long>(kept.size());
  ZMat projection(k, m.cols);
  ZMat lifts(m.rows, k);
  for (long j = 0; j < k; ++j) {
    for (long c = 0; c < m.cols; ++c) projection.at(j, c) = snf.u.at(kept[j], c);
    for (long r = 0; r < m.rows; ++r) lifts.at(r, j) = uinv.at(r, kept[j]);
  }
  return Cokernel{FinAbGroup::create(std::move(factors)), std::move(projection),
                  std::move(lifts)};
}

PhaseQZ char_pairing(const FinAbGroup& g, const Elem& x, const Elem& chi) {
  require(static_cast<long>(x.size()) == g.rank() &&
              static_cast<long>(chi.size()) == g.rank(),
          "ShapeMismatch", "pairing rank mismatch");
  Rat acc(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += Rat(Int(static_cast<long>(x[i])) * Int(static_cast<long>(chi[i])),
               Int(static_cast<long>(g.factors[i])));
  }
  return PhaseQZ(acc);
}

}  // namespace tqftkit
