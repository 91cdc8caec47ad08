#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tqftkit/dw.hpp"
#include "tqftkit/error.hpp"

using namespace tqftkit;

namespace {

// Heisenberg-type bilinear cocycle on Z/2 x Z/2 (element index 2a + b).
Cocycle2 heisenberg_z2z2() {
  FiniteGroup g = named_group("Z2xZ2");
  std::vector<std::vector<PhaseQZ>> c(4, std::vector<PhaseQZ>(4));
  for (long x = 0; x < 4; ++x)
    for (long y = 0; y < 4; ++y) c[x][y] = PhaseQZ::of((x >> 1) * (y & 1), 2);
  return Cocycle2::create(std::move(g), std::move(c));
}

Cocycle2 z2_sign_cocycle() {
  FiniteGroup g = named_group("Z/2");
  std::vector<std::vector<PhaseQZ>> c(2, std::vector<PhaseQZ>(2));
  c[1][1] = PhaseQZ::of(1, 2);
  return Cocycle2::create(std::move(g), std::move(c));
}

Rat rat_of(const CycloValue& v) { return v.rational_value(); }

}  // namespace

TEST_CASE("finite group validation") {
  CHECK_THROWS_WITH_AS(FiniteGroup::create({}), doctest::Contains("InvalidGroup"), Error);
  CHECK_THROWS_WITH_AS(FiniteGroup::create({{0, 1}, {1}}),
                       doctest::Contains("InvalidGroup"), Error);
  CHECK_THROWS_WITH_AS(FiniteGroup::create({{0, 1}, {1, 5}}),
                       doctest::Contains("InvalidGroup"), Error);
  // left zero semigroup: no identity
  CHECK_THROWS_WITH_AS(FiniteGroup::create({{0, 0}, {1, 1}}),
                       doctest::Contains("InvalidGroup"), Error);
  // quasigroup with identity but broken associativity
  CHECK_THROWS_WITH_AS(FiniteGroup::create({{0, 1, 2, 3, 4},
                                            {1, 0, 3, 4, 2},
                                            {2, 4, 0, 1, 3},
                                            {3, 2, 4, 0, 1},
                                            {4, 3, 1, 2, 0}}),
                       doctest::Contains("InvalidGroup"), Error);
  CHECK_THROWS_WITH_AS(named_group("F17"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(named_group("Z/0"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(named_group("Z/21"), doctest::Contains("ParseError"), Error);
}

TEST_CASE("builtin groups") {
  FiniteGroup z6 = named_group("Z/6");
  CHECK(z6.order() == 6);
  CHECK(z6.is_abelian());
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.inv(2) == 4);

  FiniteGroup v4 = named_group("Z2xZ2");
  CHECK(v4.order() == 4);
  CHECK(v4.is_abelian());
  for (long x = 1; x < 4; ++x) CHECK(v4.element_order(x) == 2);

  FiniteGroup s3 = named_group("S3");
  CHECK(s3.order() == 6);
  CHECK(!s3.is_abelian());

  FiniteGroup d4 = named_group("D4");
  CHECK(d4.order() == 8);
  CHECK(!d4.is_abelian());

  FiniteGroup q8 = named_group("Q8");
  CHECK(q8.order() == 8);
  CHECK(!q8.is_abelian());
  // i * j = k, j * i = -k, i^2 = -1
  CHECK(q8.mul(1, 2) == 3);
  CHECK(q8.mul(2, 1) == 7);
  CHECK(q8.mul(1, 1) == 4);
  long order2 = 0;
  for (long x = 0; x < 8; ++x)
    if (q8.element_order(x) == 2) ++order2;
  CHECK(order2 == 1);

  FiniteGroup a4 = named_group("A4");
  CHECK(a4.order() == 12);
  CHECK(!a4.is_abelian());
  std::set<long> orders;
  for (long x = 0; x < 12; ++x) orders.insert(a4.element_order(x));
  CHECK(orders == std::set<long>({1, 2, 3}));

  CHECK_THROWS_WITH_AS(
      perm_group_closure(8, {{1, 2, 3, 4, 5, 6, 7, 0}, {1, 0, 2, 3, 4, 5, 6, 7}}),
      doctest::Contains("TooLarge"), Error);
  CHECK_THROWS_WITH_AS(perm_group_closure(3, {{0, 0, 2}}),
                       doctest::Contains("InvalidGroup"), Error);
}

TEST_CASE("cocycle validation") {
  FiniteGroup z2 = named_group("Z/2");
  CHECK(!cocycle_defect(z2, {{PhaseQZ(), PhaseQZ()}, {PhaseQZ(), PhaseQZ::of(1, 2)}})
             .has_value());

  auto bad_norm = cocycle_defect(z2, {{PhaseQZ(), PhaseQZ::of(1, 2)}, {PhaseQZ(), PhaseQZ()}});
  REQUIRE(bad_norm.has_value());
  CHECK(bad_norm->normalization);

  // normalized but fails the coboundary identity on Z/3
  FiniteGroup z3 = named_group("Z/3");
  std::vector<std::vector<PhaseQZ>> c3(3, std::vector<PhaseQZ>(3));
  c3[1][1] = PhaseQZ::of(1, 3);
  auto bad_id = cocycle_defect(z3, c3);
  REQUIRE(bad_id.has_value());
  CHECK(!bad_id->normalization);
  CHECK_THROWS_WITH_AS(Cocycle2::create(z3, c3), doctest::Contains("InvalidCocycle"),
                       Error);

  CHECK_THROWS_WITH_AS(Cocycle2::create(z3, {{PhaseQZ()}}),
                       doctest::Contains("InvalidCocycle"), Error);
  CHECK_NOTHROW(z2_sign_cocycle());
  CHECK_NOTHROW(heisenberg_z2z2());
}

TEST_CASE("twisted algebra basics") {
  TwistedGroupAlgebra a(z2_sign_cocycle());
  // delta_1 * delta_1 = -delta_0
  auto p = a.mul(a.delta(1), a.delta(1));
  CHECK(p[0] == CycloValue::from_rational(Rat(-1)));
  CHECK(p[1].is_zero());
  CHECK(rat_of(a.trace(a.unit())) == Rat(1, 2));
  CHECK(a.trace(a.delta(1)).is_zero());

  // symmetric cocycle on an abelian group: still commutative, center is everything
  CHECK(algebra_center_dim(a) == 2);

  TwistedGroupAlgebra b(Cocycle2::zero(named_group("Z/2")));
  CHECK(algebra_center_dim(b) == 2);
}

TEST_CASE("center dimension counts conjugacy classes when untwisted") {
  CHECK(algebra_center_dim(TwistedGroupAlgebra(Cocycle2::zero(named_group("S3")))) == 3);
  CHECK(algebra_center_dim(TwistedGroupAlgebra(Cocycle2::zero(named_group("D4")))) == 5);
  CHECK(algebra_center_dim(TwistedGroupAlgebra(Cocycle2::zero(named_group("Q8")))) == 5);
  CHECK(algebra_center_dim(TwistedGroupAlgebra(Cocycle2::zero(named_group("A4")))) == 4);
  CHECK(algebra_center_dim(TwistedGroupAlgebra(Cocycle2::zero(named_group("Z/12")))) == 12);
}

TEST_CASE("frobenius partition values") {
  TwistedGroupAlgebra triv(Cocycle2::zero(named_group("Z/1")));
  CHECK(rat_of(frobenius_partition(triv, 0)) == Rat(1));
  CHECK(rat_of(frobenius_partition(triv, 3)) == Rat(1));

  TwistedGroupAlgebra z2(Cocycle2::zero(named_group("Z/2")));
  CHECK(rat_of(frobenius_partition(z2, 0)) == Rat(1, 2));
  CHECK(rat_of(frobenius_partition(z2, 1)) == Rat(2));
  CHECK(rat_of(frobenius_partition(z2, 2)) == Rat(8));

  TwistedGroupAlgebra s3(Cocycle2::zero(named_group("S3")));
  CHECK(rat_of(frobenius_partition(s3, 2)) == Rat(81));
  CHECK_THROWS_WITH_AS(frobenius_partition(s3, -1), doctest::Contains("ParseError"),
                       Error);
}

TEST_CASE("frobenius matches the brute-force surface count") {
  for (const char* name : {"Z/1", "Z/2", "Z/5", "Z/12", "Z2xZ2", "S3", "D4", "Q8", "A4"}) {
    FiniteGroup g = named_group(name);
    TwistedGroupAlgebra a(Cocycle2::zero(g));
    auto basis = a.center_basis();
    CHECK(rat_of(frobenius_from_basis(a, basis, 1)) ==
          Rat(static_cast<long>(basis.size())));
    for (long genus = 0; genus <= 2; ++genus) {
      CAPTURE(name);
      CAPTURE(genus);
      CHECK(rat_of(frobenius_partition(a, genus)) ==
            brute_force_surface(g, genus, false));
      CHECK(brute_force_surface(g, genus, true) == brute_force_surface(g, genus, false));
    }
  }
  CHECK_THROWS_WITH_AS(brute_force_surface(named_group("Z/20"), 4, true),
                       doctest::Contains("TooLarge"), Error);
}

TEST_CASE("frobenius is basis independent") {
  TwistedGroupAlgebra a(Cocycle2::zero(named_group("S3")));
  auto basis = a.center_basis();
  REQUIRE(basis.size() == 3);

  // permute and rescale by roots of unity
  std::vector<TwistedGroupAlgebra::Vec> scrambled;
  scrambled.push_back(basis[2]);
  scrambled.push_back(basis[0]);
  scrambled.push_back(basis[1]);
  CycloValue z3 = CycloValue::root_of_unity(3, 1);
  for (auto& v : scrambled)
    for (auto& entry : v) entry = entry * z3;
  // mix in a multiple of another vector
  for (long i = 0; i < 6; ++i)
    scrambled[0][i] = scrambled[0][i] + scrambled[1][i] + scrambled[1][i];

  for (long genus = 0; genus <= 2; ++genus)
    CHECK(frobenius_from_basis(a, scrambled, genus) == frobenius_partition(a, genus));

  std::vector<TwistedGroupAlgebra::Vec> degenerate{basis[0], basis[0], basis[1]};
  CHECK_THROWS_WITH_AS(frobenius_from_basis(a, degenerate, 1),
                       doctest::Contains("SingularTrace"), Error);
}

TEST_CASE("twisted partition function on the heisenberg cocycle") {
  TwistedGroupAlgebra a(heisenberg_z2z2());
  auto basis = a.center_basis();
  REQUIRE(basis.size() == 1);
  // center is the unit line
  CHECK(!basis[0][0].is_zero());
  for (long y = 1; y < 4; ++y) CHECK(basis[0][y].is_zero());

  // Z(genus g) = 4^{g-1}
  CHECK(rat_of(frobenius_partition(a, 0)) == Rat(1, 4));
  CHECK(rat_of(frobenius_partition(a, 1)) == Rat(1));
  CHECK(rat_of(frobenius_partition(a, 2)) == Rat(4));
  CHECK(rat_of(frobenius_partition(a, 3)) == Rat(16));
}

TEST_CASE("one dimensional theories") {
  FiniteGroup z4 = named_group("Z/4");
  std::vector<PhaseQZ> trivial(4);
  CHECK(dim1_partition(z4, trivial) == Rat(1));
  std::vector<PhaseQZ> quarter;
  for (long x = 0; x < 4; ++x) quarter.push_back(PhaseQZ::of(x, 4));
  CHECK(dim1_partition(z4, quarter) == Rat(0));
  std::vector<PhaseQZ> half;
  for (long x = 0; x < 4; ++x) half.push_back(PhaseQZ::of(x, 2));
  CHECK(dim1_partition(z4, half) == Rat(0));

  std::vector<PhaseQZ> broken(4);
  broken[1] = PhaseQZ::of(1, 3);
  CHECK_THROWS_WITH_AS(dim1_partition(z4, broken), doctest::Contains("NotACharacter"),
                       Error);
  CHECK_THROWS_WITH_AS(dim1_partition(z4, {PhaseQZ()}),
                       doctest::Contains("NotACharacter"), Error);
}

TEST_CASE("three manifold counts from presentations") {
  FiniteGroup s3 = named_group("S3");
  // sphere: empty presentation of the trivial fundamental group
  CHECK(dw3_invariant({0, {}}, s3) == Rat(1, 6));
  // S^1 x S^2: one generator, no relators
  CHECK(dw3_invariant({1, {}}, s3) == Rat(1));
  // RP^3-like: one generator squared
  CHECK(dw3_invariant({1, {{{0, 2}}}}, named_group("Z/2")) == Rat(1));
  CHECK(dw3_invariant({1, {{{0, 2}}}}, named_group("Z/4")) == Rat(1, 2));
  CHECK(dw3_invariant({1, {{{0, -2}}}}, named_group("Z/4")) == Rat(1, 2));
  // T^2 x S^1 seen through the commutator relator: counts conjugacy classes
  GroupPresentation torus{2, {{{0, 1}, {1, 1}, {0, -1}, {1, -1}}}};
  CHECK(dw3_invariant(torus, s3) == Rat(3));
  CHECK(dw3_invariant(torus, named_group("D4")) == Rat(5));
  CHECK(dw3_invariant(torus, named_group("Z/3")) == Rat(3));
  // serial and parallel agree
  CHECK(dw3_invariant(torus, s3, false) == dw3_invariant(torus, s3, true));

  CHECK_THROWS_WITH_AS(dw3_invariant({1, {{{2, 1}}}}, s3), doctest::Contains("ParseError"),
                       Error);
  CHECK_THROWS_WITH_AS(dw3_invariant({12, {}}, named_group("Z/20")),
                       doctest::Contains("TooLarge"), Error);
}

TEST_CASE("abelian characters") {
  FiniteGroup z4 = named_group("Z/4");
  auto chars = abelian_characters(z4);
  REQUIRE(chars.size() == 4);
  std::set<std::vector<Rat>> got;
  for (const auto& phi : chars) {
    std::vector<Rat> turns;
    for (const PhaseQZ& p : phi) turns.push_back(p.turns());
    got.insert(turns);
  }
  std::set<std::vector<Rat>> want;
  for (long k = 0; k < 4; ++k) {
    std::vector<Rat> turns;
    for (long x = 0; x < 4; ++x) turns.push_back(PhaseQZ::of(k * x, 4).turns());
    want.insert(turns);
  }
  CHECK(got == want);

  auto v4chars = abelian_characters(named_group("Z2xZ2"));
  CHECK(v4chars.size() == 4);
  std::set<std::vector<Rat>> v4got;
  for (const auto& phi : v4chars) {
    std::vector<Rat> turns;
    for (const PhaseQZ& p : phi) turns.push_back(p.turns());
    v4got.insert(turns);
  }
  CHECK(v4got.size() == 4);

  CHECK(abelian_characters(named_group("Z/1")).size() == 1);
  CHECK_THROWS_WITH_AS(abelian_characters(named_group("S3")),
                       doctest::Contains("NonAbelian"), Error);
}

TEST_CASE("abelian center simples") {
  CHECK(center_simples_abelian(Cocycle2::zero(named_group("Z/1"))).size() == 1);
  CHECK(center_simples_abelian(Cocycle2::zero(named_group("Z/2"))).size() == 4);
  CHECK(center_simples_abelian(z2_sign_cocycle()).size() == 4);
  CHECK(center_simples_abelian(Cocycle2::zero(named_group("Z/6"))).size() == 36);

  auto simples = center_simples_abelian(heisenberg_z2z2());
  REQUIRE(simples.size() == 16);
  // the simple at x = (1,0) with trivial ordinary part has character b_y / 2
  bool found = false;
  for (const auto& s : simples) {
    if (s.x != 2) continue;
    std::vector<PhaseQZ> want{PhaseQZ(), PhaseQZ::of(1, 2), PhaseQZ(), PhaseQZ::of(1, 2)};
    if (s.character == want) found = true;
  }
  CHECK(found);

  CHECK_THROWS_WITH_AS(center_simples_abelian(Cocycle2::zero(named_group("D4"))),
                       doctest::Contains("NonAbelian"), Error);
}
