#include "tqftkit/tqft4.hpp"

#include <utility>

#include "tqftkit/error.hpp"
#include "tqftkit/lattice.hpp"

namespace tqftkit {

namespace {

ZMat negated(ZMat m) {
  for (Int& v : m.a) v = -v;
  return m;
}

}  // namespace

FourManifold FourManifold::create(std::string name, long b1, ZMat intersection) {
  require(b1 >= 0, "InvalidManifold", "b1 must be nonnegative");
  require(intersection.rows == intersection.cols, "InvalidManifold",
          "intersection form must be square");
  require(zmat_is_symmetric(intersection), "InvalidManifold",
          "intersection form must be symmetric");
  Int det = intersection.rows == 0 ? Int(1) : zmat_det(intersection);
  require(det == 1 || det == -1, "InvalidManifold",
          "intersection form must be unimodular");
  auto [pos, neg] = qmat_inertia_symmetric(qmat_from(intersection));
  FourManifold out;
  out.name_ = std::move(name);
  out.b1_ = b1;
  out.intersection_ = std::move(intersection);
  out.signature_ = pos - neg;
  return out;
}

FourManifold FourManifold::named(const std::string& name) {
  const ZMat h = named_lattice("U").gram();
  if (name == "S4") return create(name, 0, ZMat(0, 0));
  if (name == "CP2" || name == "CP2bar") {
    ZMat q(1, 1);
    q.at(0, 0) = name == "CP2" ? 1 : -1;
    return create(name, 0, std::move(q));
  }
  if (name == "S2xS2") return create(name, 0, h);
  if (name == "T4") return create(name, 4, zmat_direct_sum(h, zmat_direct_sum(h, h)));
  if (name == "K3") {
    ZMat e8m = negated(named_lattice("E8").gram());
    return create(name, 0,
                  zmat_direct_sum(zmat_direct_sum(e8m, e8m), zmat_direct_sum(h, zmat_direct_sum(h, h))));
  }
  fail("ParseError", "unknown manifold: " + name);
}

FourManifold FourManifold::connected_sum(const FourManifold& o) const {
  return create(name_ + " # " + o.name_, b1_ + o.b1_,
                zmat_direct_sum(intersection_, o.intersection_));
}

FourManifold FourManifold::reversed() const {
  return create("-" + name_, b1_, negated(intersection_));
}

PhaseQZ gerbe_action(const MetricGroup& m, const FourManifold& x, const std::vector<Elem>& c) {
  const ZMat& q = x.intersection();
  require(static_cast<long>(c.size()) == q.rows, "ShapeMismatch",
          "field needs one class per generator of H^2");
  PhaseQZ acc;
  for (long i = 0; i < q.rows; ++i) {
    acc = acc + m.q(c[static_cast<std::size_t>(i)]).times(q.at(i, i));
    for (long j = i + 1; j < q.rows; ++j)
      acc = acc + m.b(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)])
                      .times(q.at(i, j));
  }
  return acc;
}

CycloValue partition_sum(const MetricGroup& m, const FourManifold& x, bool parallel) {
  CycloValue total = block_gauss_sum(m, x.intersection(), parallel);
  Rat prefactor = Rat(int_of(m.order())) /
                  Rat(int_pow(int_of(m.order()), static_cast<unsigned long>(x.b1())));
  return total.scaled(prefactor);
}

EighthRootForm partition_closed(const MetricGroup& m, const FourManifold& x) {
  require(m.is_nondegenerate(), "DegenerateForm",
          "closed form needs a nondegenerate pairing");
  int sigma = milgram_signature(m);
  long n = static_cast<long>(m.order());
  long e = x.euler();

  // (sqrt n)^e = n^t * (c sqrt m)^u with e = 2t + u, u in {0,1}, n = c^2 m.
  long t = e >= 0 ? e / 2 : -((-e + 1) / 2);
  int u = static_cast<int>(((e % 2) + 2) % 2);
  auto [sf, c] = squarefree_split(n);
  Rat r = t >= 0 ? Rat(int_pow(Int(n), static_cast<unsigned long>(t)))
                 : Rat(1) / Rat(int_pow(Int(n), static_cast<unsigned long>(-t)));
  if (u == 1) r *= c;
  int s = static_cast<int>((((static_cast<long>(sigma) * x.signature()) % 8) + 8) % 8);
  return make_eighth_root(r, u == 1 ? sf : 1, u, s);
}

}  // namespace tqftkit
