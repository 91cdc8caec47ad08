#pragma once

#include "tqftkit/cycmat.hpp"
#include "tqftkit/intmat.hpp"
#include "tqftkit/metric.hpp"

namespace tqftkit {

// Modular data of a pointed category: simple objects indexed by the group
// elements, S_{xy} = D^{-1} e(-b(x,y)), T_{xx} = e(q(x)), D = sqrt(|A|),
// central charge = Milgram signature.
struct PointedMTC {
  MetricGroup metric = MetricGroup::trivial();
  CycloValue d;        // sqrt(|A|)
  int central_charge = 0;
  CMat s, t;
};

// Builds and verifies the modular data. The unitarity, charge-conjugation
// and (ST)^3 identities are certified at construction through their exact
// scalar reductions (character sums and translated Gauss sums); the tests pin
// the literal matrix products on small groups. DegenerateForm when b has a
// radical; TooLarge past 256 elements.
PointedMTC modular_data(const MetricGroup& m, bool parallel = true);

// sum_x (S_{0x})^{2-2g} = |A|^g.
Int verlinde_dim(const MetricGroup& m, long genus);

// Verlinde sum (1/|A|) sum_w e(-b(x,w)) e(-b(y,w)) e(b(z,w)) over element
// indices; equals [x + y = z] for a nondegenerate form.
Rat fusion_coefficient(const MetricGroup& m, long long x, long long y, long long z);

// Framed link along which to do surgery, carried by its linking matrix.
struct SurgeryPresentation {
  ZMat linking;  // symmetric; empty encodes the three-sphere
};

// Surgery invariant D^{-(n+1)} zeta8^{-c sigma(B)} sum over A^n of
// e(sum_i B_ii q(x_i) + sum_{i<j} B_ij b(x_i, x_j)). Invariant under
// stabilization B -> B + [+-1] and unimodular congruence.
CycloValue rt_invariant(const MetricGroup& m, const SurgeryPresentation& link,
                        bool parallel = true);

}  // namespace tqftkit
