#include "tqftkit/lattice.hpp"

#include <utility>

#include "tqftkit/error.hpp"
#include "tqftkit/ratmat.hpp"

namespace tqftkit {

namespace {

QMat inverse_gram(const EvenLattice& l) {
  require(!l.is_degenerate(), "DegenerateLattice", "gram matrix is singular");
  return qmat_inverse(qmat_from(l.gram()));
}

Rat bilinear(const QMat& m, const std::vector<Rat>& u, const std::vector<Rat>& v) {
  require(static_cast<long>(u.size()) == m.rows && static_cast<long>(v.size()) == m.cols,
          "ShapeMismatch", "vector length does not match matrix");
  Rat acc = 0;
  for (long i = 0; i < m.rows; ++i) {
    if (u[i] == 0) continue;
    Rat row = 0;
    for (long j = 0; j < m.cols; ++j) row += m.at(i, j) * v[j];
    acc += u[i] * row;
  }
  return acc;
}

QVec to_qvec(const IVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

IVec column_of(const ZMat& m, long j) {
  IVec col(m.rows);
  for (long i = 0; i < m.rows; ++i) col[i] = m.at(i, j);
  return col;
}

// Metric group on coker(rel) with q(m) = scale/2 * m^T ginv m on lifts.
MetricGroup lift_form(const QMat& ginv, const Cokernel& k, const Rat& scale) {
  long r = k.group.rank();
  std::vector<PhaseQZ> qd;
  std::vector<std::vector<PhaseQZ>> boff;
  std::vector<QVec> lifts;
  lifts.reserve(r);
  for (long j = 0; j < r; ++j) lifts.push_back(to_qvec(column_of(k.lifts, j)));
  for (long i = 0; i < r; ++i) {
    qd.emplace_back(scale / 2 * bilinear(ginv, lifts[i], lifts[i]));
    std::vector<PhaseQZ> row;
    for (long j = i + 1; j < r; ++j)
      row.emplace_back(scale * bilinear(ginv, lifts[i], lifts[j]));
    boff.push_back(std::move(row));
  }
  return MetricGroup::create(k.group, std::move(qd), std::move(boff));
}

ZMat scaled_gram(const EvenLattice& l, long c) {
  ZMat m = l.gram();
  for (auto& e : m.a) e *= c;
  return m;
}

}  // namespace

EvenLattice EvenLattice::create(ZMat gram) {
  require(gram.rows == gram.cols, "InvalidLattice", "gram matrix must be square");
  require(zmat_is_symmetric(gram), "InvalidLattice", "gram matrix must be symmetric");
  for (long i = 0; i < gram.rows; ++i)
    require(gram.at(i, i) % 2 == 0, "InvalidLattice", "diagonal entries must be even");
  return EvenLattice(std::move(gram));
}

Int EvenLattice::det() const { return zmat_det(gram_); }

Rat EvenLattice::pairing(const QVec& u, const QVec& v) const {
  return bilinear(qmat_from(gram_), u, v);
}

EvenLattice named_lattice(const std::string& name) {
  auto from_rows = [](std::vector<std::vector<long>> rows) {
    long n = static_cast<long>(rows.size());
    ZMat g(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) g.at(i, j) = rows[i][j];
    return EvenLattice::create(std::move(g));
  };
  if (name == "A1") return from_rows({{2}});
  if (name == "A1(-1)") return from_rows({{-2}});
  if (name == "A2") return from_rows({{2, 1}, {1, 2}});
  if (name == "U") return from_rows({{0, 1}, {1, 0}});
  if (name == "E8") {
    ZMat g(8, 8);
    for (long i = 0; i < 8; ++i) g.at(i, i) = 2;
    const std::pair<long, long> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5},
                                           {5, 6}, {6, 7}, {1, 3}};
    for (auto [i, j] : edges) {
      g.at(i, j) = -1;
      g.at(j, i) = -1;
    }
    return EvenLattice::create(std::move(g));
  }
  fail("ParseError", "unknown lattice name: " + name);
}

EvenLattice direct_sum(const EvenLattice& a, const EvenLattice& b) {
  long n = a.rank(), m = b.rank();
  ZMat g(n + m, n + m);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) g.at(i, j) = a.gram().at(i, j);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) g.at(n + i, n + j) = b.gram().at(i, j);
  return EvenLattice::create(std::move(g));
}

std::pair<int, int> signature_pair(const EvenLattice& l) {
  require(!l.is_degenerate(), "DegenerateLattice", "gram matrix is singular");
  return qmat_inertia_symmetric(qmat_from(l.gram()));
}

int signature(const EvenLattice& l) {
  auto [pos, neg] = signature_pair(l);
  return pos - neg;
}

MetricGroup discriminant_form(const EvenLattice& l, ZMat* lifts) {
  QMat ginv = inverse_gram(l);
  Cokernel k = cokernel(l.gram());
  if (lifts != nullptr) *lifts = k.lifts;
  return lift_form(ginv, k, Rat(1));
}

ApproxTower approximation_tower(const EvenLattice& l, long n) {
  require(n >= 1, "InvalidLattice", "approximation level must be >= 1");
  QMat ginv = inverse_gram(l);
  long r = l.rank();

  ZMat n_ident(r, r);
  for (long i = 0; i < r; ++i) n_ident.at(i, i) = n;

  ApproxTower t;
  t.n = n;
  t.t_star = cokernel(n_ident).group;
  t.t_nf = cokernel(scaled_gram(l, n)).group;
  Cokernel frac_ker = cokernel(scaled_gram(l, n * n));
  t.frac = lift_form(ginv, frac_ker, Rat(1) / (Int(n) * Int(n)));
  t.frac_lifts = frac_ker.lifts;

  Int nr = int_pow(Int(n), static_cast<unsigned long>(r));
  Int card_f = abs(l.det());
  require(int_of(t.t_star.order()) == nr, "VerificationFailed", "n-torsion cardinality");
  require(int_of(t.t_nf.order()) == card_f * nr, "VerificationFailed",
          "divided dual cardinality");
  require(int_of(t.frac.order()) == card_f * nr * nr, "VerificationFailed",
          "fractional layer cardinality");
  return t;
}

DualityReport duality_check(const ApproxTower& tower) {
  DualityReport report;
  report.radical_witness = tower.frac.radical_witness();
  report.perfect = !report.radical_witness.has_value();
  return report;
}

CenterForm center_form(const EvenLattice& l, long n) {
  require(n >= 1, "InvalidLattice", "approximation level must be >= 1");
  QMat ginv = inverse_gram(l);
  long r = l.rank();
  const ZMat& g = l.gram();

  // Pairs (m, lambda) present the center: m runs over the level-n fractional
  // layer via xi = G^-1 m / n, lambda over the dual charges. Shifting lambda
  // by G f drags xi by f, hence the upper-triangular relation block.
  ZMat rel(2 * r, 2 * r);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      rel.at(i, j) = Int(n) * Int(n) * g.at(i, j);
      rel.at(i, r + j) = Int(n) * g.at(i, j);
      rel.at(r + i, r + j) = g.at(i, j);
    }
  Cokernel k = cokernel(rel);

  auto q_value = [&](const IVec& pair_vec) {
    QVec m(r);
    IVec lambda(r);
    for (long i = 0; i < r; ++i) {
      m[i] = Rat(pair_vec[i]);
      lambda[i] = pair_vec[r + i];
    }
    QVec xi = qmat_apply(ginv, m);
    for (auto& c : xi) c /= n;
    return ribbon_theta(l, xi, lambda);
  };

  long rank_c = k.group.rank();
  std::vector<IVec> gen_lifts;
  for (long j = 0; j < rank_c; ++j) gen_lifts.push_back(column_of(k.lifts, j));

  // Descent: q must be blind to both presentation relations, checked at the
  // origin and at every generator (bilinearity covers the rest).
  std::vector<IVec> shifts;
  for (long c = 0; c < 2 * r; ++c) shifts.push_back(column_of(rel, c));
  std::vector<IVec> probes = gen_lifts;
  probes.emplace_back(2 * r, Int(0));
  for (const IVec& y : probes)
    for (const IVec& s : shifts) {
      IVec ys(2 * r);
      for (long i = 0; i < 2 * r; ++i) ys[i] = y[i] + s[i];
      require(q_value(ys) == q_value(y), "WellDefinednessFailure",
              "ribbon form does not descend to the center");
    }

  std::vector<PhaseQZ> qd;
  std::vector<std::vector<PhaseQZ>> boff;
  for (long i = 0; i < rank_c; ++i) {
    qd.push_back(q_value(gen_lifts[i]));
    std::vector<PhaseQZ> row;
    for (long j = i + 1; j < rank_c; ++j) {
      IVec sum(2 * r);
      for (long t2 = 0; t2 < 2 * r; ++t2) sum[t2] = gen_lifts[i][t2] + gen_lifts[j][t2];
      row.push_back(q_value(sum) - q_value(gen_lifts[i]) - q_value(gen_lifts[j]));
    }
    boff.push_back(std::move(row));
  }

  CenterForm out;
  out.c = MetricGroup::create(k.group, std::move(qd), std::move(boff));

  Int card_f = abs(l.det());
  Int n2r = int_pow(Int(n), static_cast<unsigned long>(2 * r));
  require(int_of(out.c.order()) == card_f * card_f * n2r, "VerificationFailed",
          "center cardinality");

  auto project = [&](const IVec& pair_vec) {
    Elem img(rank_c, 0);
    for (long i = 0; i < rank_c; ++i) {
      Int acc = 0;
      for (long j = 0; j < 2 * r; ++j) acc += k.projection.at(i, j) * pair_vec[j];
      img[i] = to_ll(acc % int_of(k.group.factors[i]));
    }
    return k.group.reduce(img);
  };

  std::vector<Elem> t_gens, f_gens;
  std::vector<IVec> t_lifts, f_lifts;
  for (long i = 0; i < r; ++i) {
    IVec tg(2 * r, Int(0));
    tg[i] = 1;
    t_lifts.push_back(tg);
    t_gens.push_back(project(tg));
    IVec fg(2 * r, Int(0));
    fg[i] = n;
    fg[r + i] = 1;
    f_lifts.push_back(fg);
    f_gens.push_back(project(fg));
  }
  out.factor_t = span_subgroup(k.group, t_gens);
  out.factor_f = span_subgroup(k.group, f_gens);

  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j)
      require(out.c.b(t_gens[i], f_gens[j]).is_zero(), "VerificationFailed",
              "center factors are not orthogonal");

  // Reference forms: the fractional-layer q on first-slot lifts, the
  // discriminant q on the charge slots of the diagonal lifts.
  auto restriction_sign = [&](const std::vector<IVec>& lifts_in, long slot_base,
                              const Rat& scale, int preferred) {
    bool plus = true, minus = true;
    for (const IVec& v : lifts_in) {
      QVec w(r);
      for (long i = 0; i < r; ++i) w[i] = Rat(v[slot_base + i]);
      PhaseQZ ref(scale / 2 * bilinear(ginv, w, w));
      PhaseQZ actual = q_value(v);
      if (actual != ref) plus = false;
      if (actual != -ref) minus = false;
    }
    require(plus || minus, "VerificationFailed", "factor does not carry a reference form");
    if (preferred < 0) return minus ? -1 : 1;
    return plus ? 1 : -1;
  };
  out.sign_t = restriction_sign(t_lifts, 0, Rat(1) / (Int(n) * Int(n)), -1);
  out.sign_f = restriction_sign(f_lifts, r, Rat(1), +1);
  return out;
}

ZMat default_symmetrizer(const EvenLattice& l) {
  long r = l.rank();
  ZMat b(r, r);
  for (long i = 0; i < r; ++i) {
    b.at(i, i) = l.gram().at(i, i) / 2;
    for (long j = i + 1; j < r; ++j) b.at(i, j) = l.gram().at(i, j);
  }
  return b;
}

PhaseQZ group_cocycle_phase(const EvenLattice& l, const ZMat& b, const QVec& xi,
                            const QVec& xi2, const IVec& pi, const IVec& pi2) {
  require(b.rows == l.rank() && b.cols == l.rank(), "BadSymmetrization",
          "symmetrizer has wrong shape");
  for (long i = 0; i < l.rank(); ++i)
    for (long j = 0; j < l.rank(); ++j)
      require(b.at(i, j) + b.at(j, i) == l.gram().at(i, j), "BadSymmetrization",
              "B + B^T must equal the gram matrix");
  QMat bq = qmat_from(b);
  Rat val = bilinear(bq, to_qvec(pi), xi2) - bilinear(bq, xi, to_qvec(pi2)) +
            bilinear(bq, to_qvec(pi), to_qvec(pi2));
  return PhaseQZ(val / 2);
}

PhaseQZ commutator_phase(const EvenLattice& l, const QVec& xi, const QVec& xi2,
                         const IVec& pi, const IVec& pi2) {
  QMat gq = qmat_from(l.gram());
  Rat val = bilinear(gq, to_qvec(pi), xi2) - bilinear(gq, xi, to_qvec(pi2)) +
            bilinear(gq, to_qvec(pi), to_qvec(pi2));
  return PhaseQZ(val / 2);
}

PhaseQZ splitting_character(const EvenLattice& l, const QVec& xi, const IVec& lambda,
                            const QVec& xi2) {
  require(!l.is_degenerate(), "DegenerateLattice", "gram matrix is singular");
  Rat lin = 0;
  require(lambda.size() == xi2.size(), "ShapeMismatch", "charge length mismatch");
  for (size_t i = 0; i < lambda.size(); ++i) lin += Rat(lambda[i]) * xi2[i];
  return PhaseQZ(lin - l.pairing(xi, xi2) / 2);
}

QVec dual_section(const EvenLattice& l, const IVec& lambda) {
  QMat ginv = inverse_gram(l);
  return qmat_apply(ginv, to_qvec(lambda));
}

PhaseQZ braiding_phase(const EvenLattice& l, const QVec& xi, const QVec& xi2) {
  return PhaseQZ(-l.pairing(xi, xi2) / 2);
}

PhaseQZ ribbon_theta(const EvenLattice& l, const QVec& xi, const IVec& lambda) {
  QVec dual = dual_section(l, lambda);
  QVec diff(xi.size());
  require(xi.size() == dual.size(), "ShapeMismatch", "point length mismatch");
  for (size_t i = 0; i < xi.size(); ++i) diff[i] = xi[i] - dual[i];
  return PhaseQZ((l.pairing(dual, dual) - l.pairing(diff, diff)) / 2);
}

}  // namespace tqftkit
