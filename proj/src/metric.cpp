#include "tqftkit/metric.hpp"

#include <algorithm>
#include <set>

#include "tqftkit/eighthroot.hpp"
#include "tqftkit/error.hpp"
#include "tqftkit/parallel.hpp"

namespace tqftkit {

namespace {

constexpr long long kExhaustiveRadicalLimit = 10000;
constexpr long long kEnumerationLimit = 1000000;

std::vector<std::vector<PhaseQZ>> full_from_ragged(long rank,
                                                   const std::vector<PhaseQZ>& q_diag,
                                                   const std::vector<std::vector<PhaseQZ>>& b_off) {
  require(static_cast<long>(b_off.size()) == rank ||
              (rank == 0 && b_off.empty()),
          "ShapeMismatch", "b_off must have one (possibly empty) row per generator");
  std::vector<std::vector<PhaseQZ>> full(static_cast<std::size_t>(rank),
                                         std::vector<PhaseQZ>(static_cast<std::size_t>(rank)));
  for (long i = 0; i < rank; ++i) {
    require(static_cast<long>(b_off[static_cast<std::size_t>(i)].size()) == rank - 1 - i,
            "ShapeMismatch", "b_off row length must cover generators above the diagonal");
    full[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        q_diag[static_cast<std::size_t>(i)].times(Int(2));
    for (long j = i + 1; j < rank; ++j) {
      const PhaseQZ& v = b_off[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)];
      full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      full[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  }
  return full;
}

// Common denominator L and integer numerators for the generator polarization.
struct BTable {
  long long L = 1;
  std::vector<std::vector<long long>> bn;
};

BTable b_table(const MetricGroup& m) {
  const long r = m.rank();
  BTable t;
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) t.L = lcm_ll(t.L, to_ll(m.b_gen(i, j).den()));
  t.bn.assign(static_cast<std::size_t>(r), std::vector<long long>(static_cast<std::size_t>(r), 0));
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      const PhaseQZ& p = m.b_gen(i, j);
      t.bn[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          to_ll(p.num()) * (t.L / to_ll(p.den()));
    }
  return t;
}

bool in_radical(const MetricGroup& m, const BTable& t, const Elem& x) {
  const long r = m.rank();
  for (long j = 0; j < r; ++j) {
    long long acc = 0;
    for (long i = 0; i < r; ++i) {
      long long xi = x[static_cast<std::size_t>(i)] % t.L;
      acc = (acc + static_cast<long long>(
                       (static_cast<__int128>(xi) *
                        t.bn[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) %
                       t.L)) %
            t.L;
    }
    if (acc % t.L != 0) return false;
  }
  return true;
}

}  // namespace

MetricGroup MetricGroup::create(FinAbGroup group, std::vector<PhaseQZ> q_diag,
                                std::vector<std::vector<PhaseQZ>> b_off) {
  const long r = group.rank();
  require(static_cast<long>(q_diag.size()) == r, "ShapeMismatch",
          "q_diag must have one entry per generator");
  for (long i = 0; i < r; ++i) {
    const long long d = group.factors[static_cast<std::size_t>(i)];
    const PhaseQZ& qi = q_diag[static_cast<std::size_t>(i)];
    require(qi.times(Int(static_cast<long>(2 * d))).is_zero() &&
                qi.times(Int(static_cast<long>(d)) * Int(static_cast<long>(d))).is_zero(),
            "InvalidMetricGroup",
            "q on a generator of order " + std::to_string(d) + " must be killed by 2d and d^2");
  }
  std::vector<std::vector<PhaseQZ>> full = full_from_ragged(r, q_diag, b_off);
  for (long i = 0; i < r; ++i)
    for (long j = i + 1; j < r; ++j) {
      const long long di = group.factors[static_cast<std::size_t>(i)];
      const long long dj = group.factors[static_cast<std::size_t>(j)];
      const PhaseQZ& v = full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      require(v.times(Int(static_cast<long>(di))).is_zero() &&
                  v.times(Int(static_cast<long>(dj))).is_zero(),
              "InvalidMetricGroup", "b off-diagonal entries must be killed by both orders");
    }
  return MetricGroup(std::move(group), std::move(q_diag), std::move(full));
}

MetricGroup MetricGroup::from_cyclic(const std::vector<long long>& cycles,
                                     const std::vector<PhaseQZ>& q_diag,
                                     const std::vector<std::vector<PhaseQZ>>& b_off,
                                     ZMat* transport) {
  const long mrank = static_cast<long>(cycles.size());
  require(static_cast<long>(q_diag.size()) == mrank, "ShapeMismatch",
          "q_diag must have one entry per presented cycle");
  std::vector<std::vector<PhaseQZ>> full = full_from_ragged(mrank, q_diag, b_off);
  for (long i = 0; i < mrank; ++i) {
    const long long d = cycles[static_cast<std::size_t>(i)];
    require(d >= 1, "InvalidMetricGroup", "cycle lengths must be positive");
    const PhaseQZ& qi = q_diag[static_cast<std::size_t>(i)];
    require(qi.times(Int(static_cast<long>(2 * d))).is_zero() &&
                qi.times(Int(static_cast<long>(d)) * Int(static_cast<long>(d))).is_zero(),
            "InvalidMetricGroup", "presented q is not well defined on its cycle");
    for (long j = i + 1; j < mrank; ++j) {
      const PhaseQZ& v = full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      require(v.times(Int(static_cast<long>(d))).is_zero() &&
                  v.times(Int(static_cast<long>(cycles[static_cast<std::size_t>(j)]))).is_zero(),
              "InvalidMetricGroup", "presented b is not well defined on its cycles");
    }
  }

  // Evaluate the presented form on an arbitrary integer vector; well defined
  // modulo the cycle lattice by the checks above.
  auto q_raw = [&](const std::vector<Int>& y) {
    PhaseQZ acc;
    for (long i = 0; i < mrank; ++i) {
      acc = acc + q_diag[static_cast<std::size_t>(i)].times(y[static_cast<std::size_t>(i)] *
                                                            y[static_cast<std::size_t>(i)]);
      for (long j = i + 1; j < mrank; ++j)
        acc = acc + full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].times(
                        y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]);
    }
    return acc;
  };

  ZMat diag(mrank, mrank);
  for (long i = 0; i < mrank; ++i) diag.at(i, i) = Int(static_cast<long>(cycles[static_cast<std::size_t>(i)]));
  Cokernel k = cokernel(diag);
  const long r = k.group.rank();

  std::vector<std::vector<Int>> lifts(static_cast<std::size_t>(r),
                                      std::vector<Int>(static_cast<std::size_t>(mrank)));
  for (long j = 0; j < r; ++j)
    for (long i = 0; i < mrank; ++i) lifts[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = k.lifts.at(i, j);

  std::vector<PhaseQZ> q_new(static_cast<std::size_t>(r));
  for (long i = 0; i < r; ++i) q_new[static_cast<std::size_t>(i)] = q_raw(lifts[static_cast<std::size_t>(i)]);
  std::vector<std::vector<PhaseQZ>> b_new(static_cast<std::size_t>(r));
  for (long i = 0; i < r; ++i) {
    b_new[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(r - 1 - i));
    for (long j = i + 1; j < r; ++j) {
      std::vector<Int> sum(static_cast<std::size_t>(mrank));
      for (long c = 0; c < mrank; ++c)
        sum[static_cast<std::size_t>(c)] = lifts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +
                                           lifts[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
      b_new[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)] =
          q_raw(sum) - q_new[static_cast<std::size_t>(i)] - q_new[static_cast<std::size_t>(j)];
    }
  }
  if (transport) *transport = k.projection;
  return create(k.group, std::move(q_new), std::move(b_new));
}

PhaseQZ MetricGroup::b_gen(long i, long j) const {
  return b_full_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

PhaseQZ MetricGroup::q(const Elem& x) const {
  require(static_cast<long>(x.size()) == rank(), "ShapeMismatch", "q argument rank");
  PhaseQZ acc;
  for (long i = 0; i < rank(); ++i) {
    Int xi(static_cast<long>(x[static_cast<std::size_t>(i)]));
    acc = acc + q_diag_[static_cast<std::size_t>(i)].times(xi * xi);
    for (long j = i + 1; j < rank(); ++j)
      acc = acc + b_full_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].times(
                      xi * Int(static_cast<long>(x[static_cast<std::size_t>(j)])));
  }
  return acc;
}

PhaseQZ MetricGroup::b(const Elem& x, const Elem& y) const {
  require(static_cast<long>(x.size()) == rank() && static_cast<long>(y.size()) == rank(),
          "ShapeMismatch", "b argument rank");
  PhaseQZ acc;
  for (long i = 0; i < rank(); ++i)
    for (long j = 0; j < rank(); ++j)
      acc = acc + b_full_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].times(
                      Int(static_cast<long>(x[static_cast<std::size_t>(i)])) *
                      Int(static_cast<long>(y[static_cast<std::size_t>(j)])));
  return acc;
}

bool MetricGroup::is_nondegenerate() const {
  if (order() <= kExhaustiveRadicalLimit) {
    BTable t = b_table(*this);
    for (long long i = 1; i < order(); ++i)
      if (in_radical(*this, t, group_.element_at(i))) return false;
    return true;
  }
  CycloValue g = gauss_sum(*this);
  CycloValue n2 = g.norm_squared();
  return n2.is_rational() && n2.rational_value() == Rat(static_cast<long>(order()));
}

std::optional<Elem> MetricGroup::radical_witness() const {
  require(order() <= kEnumerationLimit, "TooLarge", "radical scan exceeds enumeration guard");
  BTable t = b_table(*this);
  for (long long i = 1; i < order(); ++i) {
    Elem x = group_.element_at(i);
    if (in_radical(*this, t, x)) return x;
  }
  return std::nullopt;
}

bool MetricGroup::operator==(const MetricGroup& o) const {
  if (group_ != o.group_) return false;
  if (q_diag_.size() != o.q_diag_.size()) return false;
  for (std::size_t i = 0; i < q_diag_.size(); ++i)
    if (q_diag_[i] != o.q_diag_[i]) return false;
  for (std::size_t i = 0; i < b_full_.size(); ++i)
    for (std::size_t j = 0; j < b_full_[i].size(); ++j)
      if (b_full_[i][j] != o.b_full_[i][j]) return false;
  return true;
}

MetricGroup orthogonal_sum(const MetricGroup& a, const MetricGroup& b,
                           GroupHom* include_a, GroupHom* include_b) {
  const long ra = a.rank(), rb = b.rank();
  std::vector<long long> cycles;
  std::vector<PhaseQZ> q;
  for (long i = 0; i < ra; ++i) {
    cycles.push_back(a.group().factors[static_cast<std::size_t>(i)]);
    q.push_back(a.q_diag()[static_cast<std::size_t>(i)]);
  }
  for (long i = 0; i < rb; ++i) {
    cycles.push_back(b.group().factors[static_cast<std::size_t>(i)]);
    q.push_back(b.q_diag()[static_cast<std::size_t>(i)]);
  }
  std::vector<std::vector<PhaseQZ>> off(static_cast<std::size_t>(ra + rb));
  for (long i = 0; i < ra + rb; ++i) {
    off[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(ra + rb - 1 - i));
    for (long j = i + 1; j < ra + rb; ++j) {
      PhaseQZ v;  // cross-block entries stay zero
      if (j < ra)
        v = a.b_gen(i, j);
      else if (i >= ra)
        v = b.b_gen(i - ra, j - ra);
      off[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)] = v;
    }
  }
  ZMat transport;
  MetricGroup sum = MetricGroup::from_cyclic(cycles, q, off, &transport);
  auto slice = [&](long begin, long count, const FinAbGroup& dom) {
    ZMat m(sum.rank(), count);
    for (long r = 0; r < sum.rank(); ++r)
      for (long c = 0; c < count; ++c) m.at(r, c) = transport.at(r, begin + c);
    return GroupHom{dom, sum.group(), std::move(m)};
  };
  if (include_a) *include_a = slice(0, ra, a.group());
  if (include_b) *include_b = slice(ra, rb, b.group());
  return sum;
}

CycloValue gauss_sum(const MetricGroup& m, bool parallel) {
  const long r = m.rank();
  const long long n = m.order();
  long long L = 1;
  for (long i = 0; i < r; ++i) L = lcm_ll(L, to_ll(m.q_diag()[static_cast<std::size_t>(i)].den()));
  for (long i = 0; i < r; ++i)
    for (long j = i + 1; j < r; ++j) L = lcm_ll(L, to_ll(m.b_gen(i, j).den()));

  std::vector<long long> qn(static_cast<std::size_t>(r));
  for (long i = 0; i < r; ++i) {
    const PhaseQZ& p = m.q_diag()[static_cast<std::size_t>(i)];
    qn[static_cast<std::size_t>(i)] = to_ll(p.num()) * (L / to_ll(p.den()));
  }
  std::vector<std::vector<long long>> bn(static_cast<std::size_t>(r),
                                         std::vector<long long>(static_cast<std::size_t>(r), 0));
  for (long i = 0; i < r; ++i)
    for (long j = i + 1; j < r; ++j) {
      const PhaseQZ& p = m.b_gen(i, j);
      bn[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          to_ll(p.num()) * (L / to_ll(p.den()));
    }
  const std::vector<long long>& factors = m.group().factors;

  auto phase_of = [&](long long idx) -> long {
    long long coords[64];
    for (long i = r; i-- > 0;) {
      coords[i] = idx % factors[static_cast<std::size_t>(i)];
      idx /= factors[static_cast<std::size_t>(i)];
    }
    long long acc = 0;
    for (long i = 0; i < r; ++i) {
      const long long xi = coords[i] % L;
      acc = (acc + static_cast<long long>((static_cast<__int128>(xi) * xi % L) *
                                          qn[static_cast<std::size_t>(i)] % L)) %
            L;
      for (long j = i + 1; j < r; ++j) {
        const long long bij = bn[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (bij == 0) continue;
        acc = (acc + static_cast<long long>((static_cast<__int128>(xi) * (coords[j] % L) % L) *
                                            bij % L)) %
              L;
      }
    }
    return static_cast<long>(acc);
  };

  require(r <= 64, "TooLarge", "rank exceeds the decoding buffer");
  std::vector<long long> counts = phase_histogram_fold(n, static_cast<long>(L), phase_of, parallel);
  PhaseHistogram h(static_cast<long>(L));
  h.counts = std::move(counts);
  return h.to_cyclo();
}

int milgram_signature(const MetricGroup& m) {
  CycloValue g = gauss_sum(m);
  CycloValue n2 = g.norm_squared();
  require(n2.is_rational() && n2.rational_value() == Rat(static_cast<long>(m.order())),
          "DegenerateForm", "Gauss sum magnitude differs from sqrt(|A|): form is degenerate");
  EighthRootForm f = recognize_eighth_root(g);
  return f.s;
}

CycloValue block_gauss_sum(const MetricGroup& m, const ZMat& w, bool parallel) {
  require(w.rows == w.cols, "ShapeMismatch", "coupling matrix must be square");
  require(zmat_is_symmetric(w), "ShapeMismatch", "coupling matrix must be symmetric");
  const long k = w.rows;
  const long long card = m.order();
  require(k <= 32, "TooLarge", "too many tensor factors");
  Int total_i = int_pow(int_of(card), static_cast<unsigned long>(k));
  require(total_i <= int_of(100000000), "TooLarge", "gerbe sum exceeds the cap");
  long long total = to_ll(total_i);

  long long L = 1;
  for (const PhaseQZ& p : m.q_diag()) L = lcm_ll(L, to_ll(p.den()));
  for (long i = 0; i < m.rank(); ++i)
    for (long j = i + 1; j < m.rank(); ++j) L = lcm_ll(L, to_ll(m.b_gen(i, j).den()));
  const long modulus = static_cast<long>(L);
  auto residue = [&](const PhaseQZ& p) {
    return static_cast<long>(to_ll(p.num()) * (L / to_ll(p.den())) % L);
  };

  std::vector<long> qres(static_cast<std::size_t>(card));
  for (long long x = 0; x < card; ++x)
    qres[static_cast<std::size_t>(x)] = residue(m.q(m.group().element_at(x)));

  struct Term {
    long i, j;
    long long c;
  };
  std::vector<Term> diag, pairs;
  auto coupling = [&](long i, long j) {
    return ((to_ll(w.at(i, j)) % modulus) + modulus) % modulus;
  };
  for (long i = 0; i < k; ++i) {
    if (long long c = coupling(i, i)) diag.push_back({i, i, c});
    for (long j = i + 1; j < k; ++j)
      if (long long c = coupling(i, j)) pairs.push_back({i, j, c});
  }

  std::vector<std::vector<long>> bres;
  if (!pairs.empty()) {
    require(card <= 4096, "TooLarge", "pair table exceeds the cap");
    bres.assign(static_cast<std::size_t>(card), std::vector<long>(static_cast<std::size_t>(card)));
    for (long long x = 0; x < card; ++x) {
      Elem ex = m.group().element_at(x);
      for (long long y = 0; y < card; ++y)
        bres[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
            residue(m.b(ex, m.group().element_at(y)));
    }
  }

  auto phase_of = [&](long long idx) {
    long digits[32];
    long long rest = idx;
    for (long i = 0; i < k; ++i) {
      digits[i] = static_cast<long>(rest % card);
      rest /= card;
    }
    long long acc = 0;
    for (const Term& t : diag) acc += t.c * qres[digits[t.i]];
    for (const Term& t : pairs) acc += t.c * bres[digits[t.i]][digits[t.j]];
    return static_cast<long>(acc % modulus);
  };

  PhaseHistogram h(modulus);
  h.counts = phase_histogram_fold(total, modulus, phase_of, parallel);
  return h.to_cyclo();
}

bool Subgroup::contains(const Elem& x) const {
  long long idx = parent.index_of(x);
  return std::binary_search(element_indices.begin(), element_indices.end(), idx);
}

Subgroup span_subgroup(const FinAbGroup& g, const std::vector<Elem>& gens) {
  require(g.order() <= kEnumerationLimit, "TooLarge", "span enumeration guard");
  std::set<long long> seen{g.index_of(g.zero())};
  std::vector<Elem> frontier{g.zero()};
  while (!frontier.empty()) {
    Elem x = std::move(frontier.back());
    frontier.pop_back();
    for (const Elem& gen : gens) {
      Elem y = g.add(x, gen);
      if (seen.insert(g.index_of(y)).second) frontier.push_back(std::move(y));
    }
  }
  std::vector<long long> idx(seen.begin(), seen.end());
  std::vector<Elem> reduced;
  for (const Elem& gen : gens) reduced.push_back(g.reduce(gen));
  return Subgroup{g, std::move(reduced), std::move(idx)};
}

Subgroup commutant_subgroup(const MetricGroup& m, const Subgroup& s) {
  require(s.parent == m.group(), "ShapeMismatch", "subgroup lives in a different group");
  require(m.order() <= kEnumerationLimit, "TooLarge", "commutant enumeration guard");
  const FinAbGroup& g = m.group();
  std::vector<long long> members;
  for (long long i = 0; i < g.order(); ++i) {
    Elem x = g.element_at(i);
    bool ok = true;
    for (const Elem& gen : s.generators)
      if (!m.b(x, gen).is_zero()) {
        ok = false;
        break;
      }
    if (ok) members.push_back(i);
  }
  // Biadditivity makes the member set a subgroup; pick a small generating set.
  std::vector<Elem> gens;
  Subgroup span = span_subgroup(g, gens);
  for (long long idx : members) {
    if (std::binary_search(span.element_indices.begin(), span.element_indices.end(), idx))
      continue;
    gens.push_back(g.element_at(idx));
    span = span_subgroup(g, gens);
  }
  return Subgroup{g, std::move(gens), std::move(members)};
}

HeisenbergSummary heisenberg_summary(const MetricGroup& m, long genus) {
  require(genus >= 0, "ShapeMismatch", "genus must be nonnegative");
  {
    BTable t = b_table(m);
    require(m.order() <= kEnumerationLimit, "TooLarge", "degeneracy scan guard");
    for (long long i = 1; i < m.order(); ++i)
      require(!in_radical(m, t, m.group().element_at(i)), "DegenerateForm",
              "commutation phases need a nondegenerate polarization");
  }
  if (genus == 0) return {1, 1, 1};

  const long long n = m.order();
  Int total = int_pow(Int(static_cast<long>(n)), static_cast<unsigned long>(2 * genus));
  require(total <= Int(static_cast<long>(kEnumerationLimit)), "TooLarge",
          "phase-space enumeration guard");
  const long long algebra_dim = to_ll(total);

  // Radical membership per element; a tuple is central iff every slot's
  // component pairs trivially with the whole group.
  BTable t = b_table(m);
  std::vector<char> radical(static_cast<std::size_t>(n), 0);
  for (long long i = 0; i < n; ++i)
    radical[static_cast<std::size_t>(i)] = in_radical(m, t, m.group().element_at(i)) ? 1 : 0;

  long long center_dim = count_fold(algebra_dim, [&](long long idx) {
    for (long s = 0; s < 2 * genus; ++s) {
      if (!radical[static_cast<std::size_t>(idx % n)]) return false;
      idx /= n;
    }
    return true;
  });

  Int irrep = int_pow(Int(static_cast<long>(n)), static_cast<unsigned long>(genus));
  long long irrep_dim = to_ll(irrep);
  require(center_dim * irrep_dim * irrep_dim == algebra_dim, "VerificationFailed",
          "center and irrep dimensions are inconsistent");
  return {algebra_dim, center_dim, irrep_dim};
}

}  // namespace tqftkit
