#pragma once

#include <string>
#include <vector>

#include "tqftkit/abgroup.hpp"
#include "tqftkit/cyclotomic.hpp"
#include "tqftkit/eighthroot.hpp"
#include "tqftkit/intmat.hpp"
#include "tqftkit/metric.hpp"
#include "tqftkit/phase.hpp"

namespace tqftkit {

// Closed oriented 4-manifold with torsion-free middle cohomology: a first
// Betti number plus the intersection form on H^2. euler = 2 - 2*b1 + b2.
class FourManifold {
 public:
  // Throws InvalidManifold unless b1 >= 0 and the form is square, symmetric,
  // and unimodular.
  static FourManifold create(std::string name, long b1, ZMat intersection);

  // Catalog: "S4", "CP2", "CP2bar", "S2xS2", "T4", "K3". Throws ParseError
  // on anything else.
  static FourManifold named(const std::string& name);

  const std::string& name() const { return name_; }
  long b1() const { return b1_; }
  long b2() const { return intersection_.rows; }
  long euler() const { return 2 - 2 * b1_ + b2(); }
  int signature() const { return signature_; }
  const ZMat& intersection() const { return intersection_; }

  FourManifold connected_sum(const FourManifold& o) const;

  // Orientation reversal: negates the intersection form.
  FourManifold reversed() const;

 private:
  FourManifold() = default;

  std::string name_;
  long b1_ = 0;
  ZMat intersection_;
  int signature_ = 0;
};

// Action of a gerbe field c in A^{b2}:
//   q_X(c) = sum_i Q_ii q(c_i) + sum_{i<j} Q_ij b(c_i, c_j).
// Throws ShapeMismatch when c does not have b2 entries.
PhaseQZ gerbe_action(const MetricGroup& m, const FourManifold& x, const std::vector<Elem>& c);

// Brute-force gerbe path integral |A|^{1-b1} * sum_{c in A^{b2}} e(q_X(c)).
// Works for degenerate pairings too. Throws TooLarge when |A|^{b2} > 10^8.
CycloValue partition_sum(const MetricGroup& m, const FourManifold& x, bool parallel = true);

// Closed form (sqrt|A|)^euler * zeta8^{sigma(M)*sign(X)} with sigma the
// Milgram signature. Throws DegenerateForm on a degenerate pairing.
EighthRootForm partition_closed(const MetricGroup& m, const FourManifold& x);

}  // namespace tqftkit
