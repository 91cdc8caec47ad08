#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqftkit/cycmat.hpp"
#include "tqftkit/dw.hpp"
#include "tqftkit/rational.hpp"

namespace tqftkit {

// Homotopy cardinality data: one entry per connected component, each a list
// [#pi_1, #pi_2, ..] of homotopy group orders.
struct PiTower {
  std::vector<std::vector<long long>> components;
};

// Sum over components of prod_i (#pi_i)^((-1)^i).
Rat groupoid_cardinality(const PiTower& t);

// Finite group acting on a finite set; the groupoid Gamma x S => S.
class ActionGroupoid {
public:
  // action[g][s] = g.s; InvalidGroupoid unless e.s = s and (gh).s = g.(h.s).
  static ActionGroupoid create(FiniteGroup g, std::vector<std::vector<long>> action);
  // One point under the trivial group.
  static ActionGroupoid trivial();

  const FiniteGroup& group() const { return group_; }
  long points() const { return points_; }
  long act(long g, long s) const { return action_[g][s]; }
  long orbit_count() const;

private:
  ActionGroupoid(FiniteGroup g, std::vector<std::vector<long>> a, long p)
      : group_(std::move(g)), action_(std::move(a)), points_(p) {}
  FiniteGroup group_;
  std::vector<std::vector<long>> action_;
  long points_;
};

// "point" -> */G, "circle" -> G acting on itself by conjugation.
ActionGroupoid bun_groupoid(const std::string& space, FiniteGroup g);

// Functor to exact-cyclotomic vector spaces: a fiber over each point and a
// matrix rho(g, s): fiber(s) -> fiber(g.s) over each arrow.
struct LocalSystem {
  ActionGroupoid groupoid;
  std::vector<long> dims;               // fiber dimension per point
  std::vector<std::vector<CMat>> rho;   // rho[g][s]

  // Checks shapes and rho(e, s) = id; functoriality is checked separately.
  static LocalSystem create(ActionGroupoid g, std::vector<long> dims,
                            std::vector<std::vector<CMat>> rho);
};

// Exhaustive scan for rho(gh, s) != rho(g, h.s) rho(h, s); nullopt when the
// system is a genuine functor.
struct FunctorialityDefect {
  long g = 0, h = 0, s = 0;
};
std::optional<FunctorialityDefect> functoriality_defect(const LocalSystem& ls);

// One-point one-dimensional constant system over the trivial group.
LocalSystem unit_system();

// Trivial rank-d system on any action groupoid.
LocalSystem constant_system(ActionGroupoid g, long d = 1);

// dim of invariant sections, (1/|Gamma|) sum_g sum_{g.s=s} tr rho(g, s).
// NonIntegerDimension when the average is not a nonnegative integer.
long sum1_limit(const LocalSystem& ls);

// Columns form a basis of the invariant sections inside the direct sum of all
// fibers (point blocks in set order).
CMat invariant_basis(const LocalSystem& ls);

// Span of correspondences between local systems: a middle groupoid with
// equivariant maps down to both sides and a compatible linear map per point.
struct Correspondence {
  ActionGroupoid mid = ActionGroupoid::trivial();
  std::vector<long> px, py;  // point maps to source / target sets
  std::vector<long> hx, hy;  // group maps to source / target groups
  std::vector<CMat> phi;     // phi[c]: fiber_x(px[c]) -> fiber_y(py[c])
};

Correspondence identity_correspondence(const LocalSystem& x);

// Matrix of the pushforward Inv(x) -> Inv(y) in the invariant_basis bases:
// the groupoid sum over the homotopy fiber, each object weighted by
// 1/#Aut. Throws IncompatibleSystems when the maps are not equivariant or
// phi fails to intertwine.
CMat sum1_push(const LocalSystem& x, const LocalSystem& y, const Correspondence& corr);

// Homotopy fiber product over y: objects (a, eta, b) with eta.(a down) = (b down),
// acted on by the product group. Pushing the composite equals composing pushes.
Correspondence compose_correspondences(const LocalSystem& y, const Correspondence& a,
                                       const Correspondence& b);

}  // namespace tqftkit
