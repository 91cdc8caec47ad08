#pragma once

#include <optional>
#include <vector>

#include "tqftkit/abgroup.hpp"
#include "tqftkit/cyclotomic.hpp"
#include "tqftkit/intmat.hpp"
#include "tqftkit/phase.hpp"

namespace tqftkit {

// Finite abelian group A with a quadratic form q: A -> Q/Z whose polarization
// b(x,y) = q(x+y) - q(x) - q(y) is biadditive. Stored on the invariant-factor
// presentation as q on generators plus the off-diagonal polarization values.
class MetricGroup {
public:
  // Well-definedness on Z/d_i demands den(q_i) | 2*d_i and den(q_i) | d_i^2
  // (periodicity plus homogeneity); off-diagonal entries need d | b_ij in
  // both slots. b_off is ragged: row i lists b(e_i, e_j) for j = i+1..r-1.
  static MetricGroup create(FinAbGroup group, std::vector<PhaseQZ> q_diag,
                            std::vector<std::vector<PhaseQZ>> b_off);

  // Same data on an arbitrary cyclic presentation (no divisibility-chain
  // requirement); canonicalizes through Smith normal form, transporting the
  // form along generator lifts. `transport`, when non-null, receives the
  // coordinate map from the presented generators to the canonical ones.
  // Zero form on the trivial group (the empty orthogonal sum).
  static MetricGroup trivial() { return MetricGroup(FinAbGroup::trivial(), {}, {}); }

  static MetricGroup from_cyclic(const std::vector<long long>& cycles,
                                 const std::vector<PhaseQZ>& q_diag,
                                 const std::vector<std::vector<PhaseQZ>>& b_off,
                                 ZMat* transport = nullptr);

  const FinAbGroup& group() const { return group_; }
  long rank() const { return group_.rank(); }
  long long order() const { return group_.order(); }
  const std::vector<PhaseQZ>& q_diag() const { return q_diag_; }

  // Polarization on generators; b_gen(i,i) = 2*q_i.
  PhaseQZ b_gen(long i, long j) const;

  PhaseQZ q(const Elem& x) const;
  PhaseQZ b(const Elem& x, const Elem& y) const;

  // Exhaustive radical scan for small groups, Gauss-sum magnitude beyond.
  bool is_nondegenerate() const;
  // Nonzero element of the radical when one exists (order guard: TooLarge).
  std::optional<Elem> radical_witness() const;

  bool operator==(const MetricGroup& o) const;

private:
  MetricGroup(FinAbGroup g, std::vector<PhaseQZ> qd, std::vector<std::vector<PhaseQZ>> bf)
      : group_(std::move(g)), q_diag_(std::move(qd)), b_full_(std::move(bf)) {}

  FinAbGroup group_;
  std::vector<PhaseQZ> q_diag_;
  std::vector<std::vector<PhaseQZ>> b_full_;  // rank x rank, diagonal = 2*q_i
};

// Orthogonal direct sum; the optional out-params receive the inclusion homs
// of the two summands into the result.
MetricGroup orthogonal_sum(const MetricGroup& a, const MetricGroup& b,
                           GroupHom* include_a = nullptr, GroupHom* include_b = nullptr);

// sum over x in A of e(q(x)), exact.
CycloValue gauss_sum(const MetricGroup& m, bool parallel = true);

// sigma in Z/8 with gauss_sum = sqrt(|A|) * zeta8^sigma.
// Throws DegenerateForm when |gauss_sum|^2 != |A|.
int milgram_signature(const MetricGroup& m);

// Gauss sum of the form induced on A^k by a symmetric integer coupling W:
//   sum over c in A^k of e(sum_i W_ii q(c_i) + sum_{i<j} W_ij b(c_i, c_j)).
// Zero couplings are skipped, so sparse W costs only its support.
// Throws ShapeMismatch unless W is square and symmetric; TooLarge when
// |A|^k > 10^8, k > 32, or an off-diagonal coupling needs |A| > 4096.
CycloValue block_gauss_sum(const MetricGroup& m, const ZMat& w, bool parallel = true);

// Subgroup of a finite abelian group as the span of a generating list.
struct Subgroup {
  FinAbGroup parent;
  std::vector<Elem> generators;        // small generating set
  std::vector<long long> element_indices;  // sorted; the whole span

  long long order() const { return static_cast<long long>(element_indices.size()); }
  bool contains(const Elem& x) const;
  bool operator==(const Subgroup& o) const {
    return parent == o.parent && element_indices == o.element_indices;
  }
};

Subgroup span_subgroup(const FinAbGroup& g, const std::vector<Elem>& gens);

// {x in A : b(x, s) = 0 for all s in S}; generator checks only, so the cost
// is |A| * #generators.
Subgroup commutant_subgroup(const MetricGroup& m, const Subgroup& s);

// Dimensions attached to the commutation phases e(b) on A^{2*genus}:
// total twisted algebra dimension, dimension of its center, and the square
// root of their quotient (the unique irreducible when the center is trivial).
struct HeisenbergSummary {
  long long algebra_dim;
  long long center_dim;
  long long irrep_dim;
};

// Throws DegenerateForm when b is degenerate; TooLarge past the scan guard.
HeisenbergSummary heisenberg_summary(const MetricGroup& m, long genus);

}  // namespace tqftkit
