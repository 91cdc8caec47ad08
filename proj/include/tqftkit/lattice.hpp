#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqftkit/intmat.hpp"
#include "tqftkit/metric.hpp"

namespace tqftkit {

// Integer column vector of lattice rank (a translation / charge vector).
using IVec = std::vector<Int>;
// Rational point of the ambient space (coordinates on the covering torus).
using QVec = std::vector<Rat>;

// Even integral lattice: symmetric Gram matrix with even diagonal entries.
class EvenLattice {
public:
  static EvenLattice create(ZMat gram);  // throws InvalidLattice

  const ZMat& gram() const { return gram_; }
  long rank() const { return gram_.rows; }
  Int det() const;
  bool is_degenerate() const { return det() == 0; }

  // <u, v> = u^T G v, on rational inputs.
  Rat pairing(const QVec& u, const QVec& v) const;

private:
  explicit EvenLattice(ZMat g) : gram_(std::move(g)) {}
  ZMat gram_;
};

// "A1", "A2", "E8", "U", "A1(-1)".
EvenLattice named_lattice(const std::string& name);
EvenLattice direct_sum(const EvenLattice& a, const EvenLattice& b);

// (n_+, n_-); throws DegenerateLattice on singular Gram matrices.
std::pair<int, int> signature_pair(const EvenLattice& l);
int signature(const EvenLattice& l);

// Discriminant form L*/L with q(x) = <x, x>/2; throws DegenerateLattice.
// `lifts`, when non-null, receives integer lifts of the canonical generators.
MetricGroup discriminant_form(const EvenLattice& l, ZMat* lifts = nullptr);

// Finite pieces of the torus approximation at level n:
//   t_star = coker(n)        (n-torsion of the covering torus)
//   t_nf   = coker(n G)      (n-divided dual points modulo the lattice)
//   frac   = coker(n^2 G)    with q(m) = <m, m>_{G^-1} / (2 n^2)
struct ApproxTower {
  long n = 1;
  FinAbGroup t_star;
  FinAbGroup t_nf;
  MetricGroup frac = MetricGroup::trivial();
  ZMat frac_lifts;  // rank x frac.rank(): integer lifts of frac generators
};

ApproxTower approximation_tower(const EvenLattice& l, long n);

// Perfectness of the polarization on the fractional layer.
struct DualityReport {
  bool perfect = false;
  std::optional<Elem> radical_witness;
};

DualityReport duality_check(const ApproxTower& tower);

// The center of the level-n Heisenberg-type extension: as a group the
// product of the fractional layer and the discriminant form, carrying the
// ribbon quadratic form evaluated on lifts. The two factors are orthogonal
// and each other's commutants; sign_* records how q restricts to each factor
// relative to the reference forms (+1 same, -1 negated).
struct CenterForm {
  MetricGroup c = MetricGroup::trivial();
  Subgroup factor_t;
  Subgroup factor_f;
  int sign_t = 0;
  int sign_f = 0;
};

CenterForm center_form(const EvenLattice& l, long n);

// Integral symmetrizations of the Gram matrix: B with B + B^T = G.
// The default takes half the (even) diagonal and the strict upper triangle.
ZMat default_symmetrizer(const EvenLattice& l);

// Phase attached to translating the pair of points (xi, xi2) by the integer
// pair (pi, pi2): (B(pi, xi2) - B(xi, pi2) + B(pi, pi2)) / 2.
// Throws BadSymmetrization unless B + B^T = G.
PhaseQZ group_cocycle_phase(const EvenLattice& l, const ZMat& b, const QVec& xi,
                            const QVec& xi2, const IVec& pi, const IVec& pi2);

// Symmetrizer-independent commutator phase:
// (<pi, xi2> - <xi, pi2> + <pi, pi2>) / 2.
PhaseQZ commutator_phase(const EvenLattice& l, const QVec& xi, const QVec& xi2,
                         const IVec& pi, const IVec& pi2);

// Character of the splitting attached to (xi, lambda), evaluated at xi2:
// lambda^T xi2 - <xi, xi2> / 2.
PhaseQZ splitting_character(const EvenLattice& l, const QVec& xi, const IVec& lambda,
                            const QVec& xi2);

// G^-1 lambda: the canonical rational point attached to a dual charge.
QVec dual_section(const EvenLattice& l, const IVec& lambda);

// -<xi, xi2> / 2.
PhaseQZ braiding_phase(const EvenLattice& l, const QVec& xi, const QVec& xi2);

// theta(xi, lambda) = (|G^-1 lambda|^2 - |xi - G^-1 lambda|^2) / 2,
// squared lengths taken with respect to <.,.>.
PhaseQZ ribbon_theta(const EvenLattice& l, const QVec& xi, const IVec& lambda);

}  // namespace tqftkit
