#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tqftkit/cyclotomic.hpp"
#include "tqftkit/phase.hpp"
#include "tqftkit/rational.hpp"

namespace tqftkit {

// Finite group given by its full Cayley table over element indices.
class FiniteGroup {
public:
  static FiniteGroup create(std::vector<std::vector<long>> table);  // InvalidGroup

  long order() const { return static_cast<long>(table_.size()); }
  long identity() const { return identity_; }
  long mul(long x, long y) const { return table_[x][y]; }
  long inv(long x) const { return inv_[x]; }
  bool is_abelian() const;
  long element_order(long x) const;

private:
  FiniteGroup(std::vector<std::vector<long>> t, long e, std::vector<long> inv)
      : table_(std::move(t)), identity_(e), inv_(std::move(inv)) {}
  std::vector<std::vector<long>> table_;
  long identity_;
  std::vector<long> inv_;
};

// "Z/n" (n <= 20), "Z2xZ2", "S3", "D4", "Q8", "A4".
FiniteGroup named_group(const std::string& name);

// Closure of permutations of {0..points-1} under composition; identity is
// element 0. Throws TooLarge past 10^4 elements.
FiniteGroup perm_group_closure(long points, const std::vector<std::vector<long>>& gens);

struct CocycleDefect {
  long x = 0, y = 0, z = 0;
  bool normalization = false;  // true: fails c(e,y) = c(x,e) = 0 at (x, y)
};

// Exhaustive check of normalization and the phase cocycle identity
// c(y,z) - c(xy,z) + c(x,yz) - c(x,y) = 0.
std::optional<CocycleDefect> cocycle_defect(const FiniteGroup& g,
                                            const std::vector<std::vector<PhaseQZ>>& c);

// Normalized 2-cocycle with exact phase values.
class Cocycle2 {
public:
  static Cocycle2 create(FiniteGroup g, std::vector<std::vector<PhaseQZ>> c);
  static Cocycle2 zero(FiniteGroup g);

  const FiniteGroup& group() const { return group_; }
  PhaseQZ at(long x, long y) const { return c_[x][y]; }

private:
  Cocycle2(FiniteGroup g, std::vector<std::vector<PhaseQZ>> c)
      : group_(std::move(g)), c_(std::move(c)) {}
  FiniteGroup group_;
  std::vector<std::vector<PhaseQZ>> c_;
};

// Twisted group algebra: delta_x * delta_y = e(c(x,y)) delta_{xy},
// tr(delta_x) = [x = identity] / |G|.
class TwistedGroupAlgebra {
public:
  using Vec = std::vector<CycloValue>;

  explicit TwistedGroupAlgebra(Cocycle2 cocycle);

  const FiniteGroup& group() const { return cocycle_.group(); }
  const Cocycle2& cocycle() const { return cocycle_; }

  Vec delta(long x) const;
  Vec unit() const { return delta(group().identity()); }
  Vec mul(const Vec& a, const Vec& b) const;
  CycloValue trace(const Vec& a) const;

  // Basis of the center: one vector per surviving conjugation orbit, with
  // phase potentials fixed by breadth-first transport.
  std::vector<Vec> center_basis() const;

private:
  Cocycle2 cocycle_;
};

long algebra_center_dim(const TwistedGroupAlgebra& a);

// Genus-g partition function from the handle element of the center:
// tr((sum_i z_i z^i)^g) with z^i the trace-dual basis. Basis independent.
CycloValue frobenius_partition(const TwistedGroupAlgebra& a, long genus);

// Same, from a caller-supplied basis of the center (exposed for the
// basis-independence tests). Throws SingularTrace when the restricted trace
// pairing is degenerate.
CycloValue frobenius_from_basis(const TwistedGroupAlgebra& a,
                                const std::vector<TwistedGroupAlgebra::Vec>& basis,
                                long genus);

// Untwisted genus-g count (1/|G|) #{tuples (a_1,b_1,..,a_g,b_g) with
// [a_1,b_1]...[a_g,b_g] = e}; oracle for frobenius_partition.
Rat brute_force_surface(const FiniteGroup& g, long genus, bool parallel = true);

// (1/|G|) sum_g e(lambda(g)); lambda must be multiplicative.
Rat dim1_partition(const FiniteGroup& g, const std::vector<PhaseQZ>& lambda);

// Word in generator indices with exponents.
using RelatorWord = std::vector<std::pair<long, long>>;

struct GroupPresentation {
  long generators = 0;
  std::vector<RelatorWord> relators;
};

// (1/|G|) #{assignments of generators satisfying every relator}.
Rat dw3_invariant(const GroupPresentation& p, const FiniteGroup& g, bool parallel = true);

// Simple object of the abelian Drinfeld center: a group element together
// with the character twisted by the conjugation line.
struct CenterSimple {
  long x = 0;
  std::vector<PhaseQZ> character;
};

std::vector<CenterSimple> center_simples_abelian(const Cocycle2& c);

// All |G| ordinary characters of an abelian group, via the invariant-factor
// decomposition of its multiplication relations.
std::vector<std::vector<PhaseQZ>> abelian_characters(const FiniteGroup& g);

}  // namespace tqftkit
