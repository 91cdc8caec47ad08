#include "tqftkit/tqft3.hpp"

#include "tqftkit/error.hpp"
#include "tqftkit/parallel.hpp"
#include "tqftkit/ratmat.hpp"

namespace tqftkit {

namespace {

// Common residue modulus for every q and b value of the form.
long phase_modulus(const MetricGroup& m) {
  long long n = 1;
  for (long i = 0; i < m.rank(); ++i)
    for (long j = i; j < m.rank(); ++j) n = lcm_ll(n, to_ll(m.b_gen(i, j).den()));
  for (const PhaseQZ& p : m.q_diag()) n = lcm_ll(n, to_ll(p.den()));
  return static_cast<long>(n);
}

long residue_of(const PhaseQZ& p, long modulus) {
  return static_cast<long>(to_ll(p.num()) * (modulus / to_ll(p.den())) % modulus);
}

}  // namespace

PointedMTC modular_data(const MetricGroup& m, bool parallel) {
  require(m.is_nondegenerate(), "DegenerateForm", "polarization has a radical");
  long long n = m.order();
  require(n <= 256, "TooLarge", "too many simple objects for explicit matrices");
  int c = milgram_signature(m);

  std::vector<Elem> elems;
  for (long long i = 0; i < n; ++i) elems.push_back(m.group().element_at(i));

  CycloValue dinv = sqrt_of_integer(static_cast<long>(n)).scaled(Rat(1) / int_of(n));
  CMat s(n, n), t(n, n);
  for (long long i = 0; i < n; ++i) {
    t.at(i, i) = CycloValue::root_of_unity(m.q(elems[i]));
    for (long long j = 0; j < n; ++j)
      s.at(i, j) = dinv * CycloValue::root_of_unity(-m.b(elems[i], elems[j]));
  }

  // The matrix identities reduce exactly, via biadditivity of b and
  // q(y - w) = q(y) - b(w,y) + q(w), to two scalar families:
  //   sum_y e(b(w,y)) = |A| [w = 0]            (unitarity, S^2 = conjugation)
  //   sum_y e(q(y) - b(w,y)) = G e(-q(w))      ((ST)^3 = zeta8^c S^2)
  // with G the Gauss sum; both are certified here for every w.
  long modulus = phase_modulus(m);
  CycloValue gauss = gauss_sum(m, parallel);
  CycloValue card = CycloValue::from_rational(Rat(int_of(n)));
  for (long long wi = 0; wi < n; ++wi) {
    const Elem& w = elems[wi];
    PhaseHistogram flat(modulus), translated(modulus);
    for (long long yi = 0; yi < n; ++yi) {
      PhaseQZ by = m.b(w, elems[yi]);
      flat.add(residue_of(by, modulus));
      translated.add(residue_of(m.q(elems[yi]) - by, modulus));
    }
    CycloValue want = wi == 0 ? card : CycloValue::zero();
    require(flat.to_cyclo() == want, "VerificationFailed",
            "character orthogonality failed");
    require(translated.to_cyclo() ==
                gauss * CycloValue::root_of_unity(-m.q(w)),
            "VerificationFailed", "translated Gauss sum failed");
  }

  PointedMTC out;
  out.metric = m;
  out.d = sqrt_of_integer(static_cast<long>(n));
  out.central_charge = c;
  out.s = std::move(s);
  out.t = std::move(t);
  return out;
}

Int verlinde_dim(const MetricGroup& m, long genus) {
  require(m.is_nondegenerate(), "DegenerateForm", "polarization has a radical");
  require(genus >= 0, "ParseError", "genus must be nonnegative");
  long long n = m.order();
  // S_{0x} = D^{-1} for every x, so each term is |A|^{g-1}
  Rat term = genus >= 1 ? Rat(int_pow(Int(static_cast<long>(n)), static_cast<unsigned long>(genus - 1)))
                        : Rat(1) / int_of(n);
  Rat total = Rat(int_of(n)) * term;
  require(total.get_den() == 1, "VerificationFailed", "Verlinde sum is not integral");
  return total.get_num();
}

Rat fusion_coefficient(const MetricGroup& m, long long x, long long y, long long z) {
  require(m.is_nondegenerate(), "DegenerateForm", "polarization has a radical");
  long long n = m.order();
  require(x >= 0 && x < n && y >= 0 && y < n && z >= 0 && z < n, "ShapeMismatch",
          "simple object index out of range");
  Elem ex = m.group().element_at(x), ey = m.group().element_at(y),
       ez = m.group().element_at(z);
  long modulus = phase_modulus(m);
  PhaseHistogram h(modulus);
  for (long long wi = 0; wi < n; ++wi) {
    Elem w = m.group().element_at(wi);
    PhaseQZ p = -m.b(ex, w) - m.b(ey, w) + m.b(ez, w);
    h.add(residue_of(p, modulus));
  }
  CycloValue v = h.to_cyclo();
  require(v.is_rational(), "VerificationFailed", "fusion sum is irrational");
  return v.rational_value() / int_of(n);
}

CycloValue rt_invariant(const MetricGroup& m, const SurgeryPresentation& link,
                        bool parallel) {
  require(m.is_nondegenerate(), "DegenerateForm", "polarization has a radical");
  const ZMat& b = link.linking;
  require(b.rows == b.cols, "ShapeMismatch", "linking matrix must be square");
  require(zmat_is_symmetric(b), "ShapeMismatch", "linking matrix must be symmetric");
  long n = b.rows;
  long long card = m.order();

  auto [pos, neg] = qmat_inertia_symmetric(qmat_from(b));
  int sigma = pos - neg;

  CycloValue z = block_gauss_sum(m, b, parallel);
  CycloValue sq = sqrt_of_integer(static_cast<long>(card));
  Rat scale = Rat(1) / Rat(int_pow(int_of(card), static_cast<unsigned long>(n + 1)));
  z = z * sq.pow(static_cast<unsigned long>(n + 1)).scaled(scale);
  long anomaly = -static_cast<long>(milgram_signature(m)) * sigma;
  return z * CycloValue::root_of_unity(PhaseQZ(Rat(anomaly, 8)));
}

}  // namespace tqftkit
