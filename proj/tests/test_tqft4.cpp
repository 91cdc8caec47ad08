#include <doctest.h>

#include <string>
#include <vector>

#include "tqftkit/error.hpp"
#include "tqftkit/groupoid.hpp"
#include "tqftkit/tqft4.hpp"

using namespace tqftkit;

namespace {

MetricGroup cyclic_form(long long d, long num, long den) {
  return MetricGroup::create(FinAbGroup::create({d}), {PhaseQZ::of(num, den)}, {{}});
}

MetricGroup semion() { return cyclic_form(2, 1, 4); }

MetricGroup hyperbolic_z2() {
  return MetricGroup::create(FinAbGroup::create({2, 2}), {PhaseQZ(), PhaseQZ()},
                             {{PhaseQZ::of(1, 2)}, {}});
}

// Nondegenerate pointed forms with |A| <= 4.
std::vector<MetricGroup> small_forms() {
  return {semion(),           cyclic_form(2, 3, 4), cyclic_form(3, 1, 3),
          cyclic_form(3, 2, 3), cyclic_form(4, 1, 8), cyclic_form(4, 3, 8),
          hyperbolic_z2()};
}

ZMat from_rows(const std::vector<std::vector<long>>& rows) {
  long n = static_cast<long>(rows.size());
  long c = n == 0 ? 0 : static_cast<long>(rows[0].size());
  ZMat b(n, c);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < c; ++j) b.at(i, j) = Int(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return b;
}

CycloValue rat_value(long num, long den = 1) {
  return CycloValue::from_rational(Rat(num, den));
}

}  // namespace

TEST_CASE("catalog manifolds carry the standard invariants") {
  struct Row {
    const char* name;
    long b1, b2, euler;
    int sign;
  };
  const Row rows[] = {
      {"S4", 0, 0, 2, 0},     {"CP2", 0, 1, 3, 1},  {"CP2bar", 0, 1, 3, -1},
      {"S2xS2", 0, 2, 4, 0},  {"T4", 4, 6, 0, 0},   {"K3", 0, 22, 24, -16},
  };
  for (const Row& r : rows) {
    CAPTURE(r.name);
    FourManifold x = FourManifold::named(r.name);
    CHECK(x.b1() == r.b1);
    CHECK(x.b2() == r.b2);
    CHECK(x.euler() == r.euler);
    CHECK(x.signature() == r.sign);
  }
  CHECK_THROWS_WITH_AS(FourManifold::named("S3"), doctest::Contains("ParseError"), Error);
}

TEST_CASE("manifold validation rejects bad data") {
  CHECK_THROWS_WITH_AS(FourManifold::create("x", -1, ZMat(0, 0)),
                       doctest::Contains("InvalidManifold"), Error);
  CHECK_THROWS_WITH_AS(FourManifold::create("x", 0, from_rows({{2}})),
                       doctest::Contains("InvalidManifold"), Error);
  CHECK_THROWS_WITH_AS(FourManifold::create("x", 0, from_rows({{0, 1}, {-1, 0}})),
                       doctest::Contains("InvalidManifold"), Error);
  CHECK_THROWS_WITH_AS(FourManifold::create("x", 0, ZMat(1, 2)),
                       doctest::Contains("InvalidManifold"), Error);
  // det -1 is a perfectly good unimodular form
  CHECK(FourManifold::create("x", 0, from_rows({{1, 0}, {0, -1}})).signature() == 0);
}

TEST_CASE("gerbe action evaluates the coupled quadratic form") {
  MetricGroup m = semion();
  const FinAbGroup& g = m.group();
  FourManifold cp2 = FourManifold::named("CP2");
  CHECK(gerbe_action(m, cp2, {g.element_at(0)}) == PhaseQZ());
  CHECK(gerbe_action(m, cp2, {g.element_at(1)}) == PhaseQZ::of(1, 4));

  FourManifold prod = FourManifold::named("S2xS2");
  CHECK(gerbe_action(m, prod, {g.element_at(1), g.element_at(1)}) == PhaseQZ::of(1, 2));
  CHECK(gerbe_action(m, prod, {g.element_at(1), g.element_at(0)}) == PhaseQZ());

  CHECK_THROWS_WITH_AS(gerbe_action(m, prod, {g.element_at(1)}),
                       doctest::Contains("ShapeMismatch"), Error);
}

TEST_CASE("brute-force gerbe sums on the catalog") {
  MetricGroup m = semion();
  CycloValue i4 = CycloValue::root_of_unity(4, 1);
  CHECK(partition_sum(m, FourManifold::named("S4")) == rat_value(2));
  CHECK(partition_sum(m, FourManifold::named("CP2")) ==
        rat_value(2) * (CycloValue::one() + i4));
  CHECK(partition_sum(m, FourManifold::named("CP2bar")) ==
        rat_value(2) * (CycloValue::one() + i4.conjugate()));
  CHECK(partition_sum(m, FourManifold::named("S2xS2")) == rat_value(4));
  CHECK(partition_sum(m, FourManifold::named("T4")) == rat_value(1));
  CHECK(partition_sum(MetricGroup::trivial(), FourManifold::named("K3")) == rat_value(1));
}

TEST_CASE("gerbe sum equals the closed form on the catalog") {
  const char* names[] = {"S4", "CP2", "CP2bar", "S2xS2", "T4"};
  for (const MetricGroup& m : small_forms()) {
    for (const char* name : names) {
      CAPTURE(name);
      FourManifold x = FourManifold::named(name);
      CHECK(partition_sum(m, x) == partition_closed(m, x).expand());
    }
  }
  // K3 traverses all 2^22 gerbe classes
  FourManifold k3 = FourManifold::named("K3");
  CHECK(partition_sum(semion(), k3) == partition_closed(semion(), k3).expand());
}

TEST_CASE("connected sums multiply and S4 is the unit") {
  FourManifold s4 = FourManifold::named("S4");
  FourManifold a = FourManifold::named("CP2");
  FourManifold b = FourManifold::named("CP2bar");
  FourManifold ab = a.connected_sum(b);
  CHECK(ab.euler() == a.euler() + b.euler() - 2);
  CHECK(ab.signature() == a.signature() + b.signature());
  CHECK(ab.b1() == 0);

  for (const MetricGroup& m : {semion(), cyclic_form(3, 1, 3), hyperbolic_z2()}) {
    CycloValue lhs = partition_closed(m, ab).expand() * partition_closed(m, s4).expand();
    CycloValue rhs = partition_closed(m, a).expand() * partition_closed(m, b).expand();
    CHECK(lhs == rhs);
    CHECK(partition_sum(m, ab) * partition_sum(m, s4) ==
          partition_sum(m, a) * partition_sum(m, b));
  }

  FourManifold t = FourManifold::named("S2xS2").connected_sum(a);
  MetricGroup m = semion();
  CHECK(partition_sum(m, t) * partition_sum(m, s4) ==
        partition_sum(m, FourManifold::named("S2xS2")) * partition_sum(m, a));
}

TEST_CASE("orientation reversal conjugates the invariant") {
  for (const MetricGroup& m : {semion(), cyclic_form(3, 1, 3)}) {
    for (const char* name : {"CP2", "S2xS2", "T4"}) {
      CAPTURE(name);
      FourManifold x = FourManifold::named(name);
      CHECK(partition_sum(m, x.reversed()) == partition_sum(m, x).conjugate());
      CHECK(partition_closed(m, x.reversed()).expand() ==
            partition_closed(m, x).expand().conjugate());
    }
  }
}

TEST_CASE("degenerate pairing: only the path integral survives") {
  MetricGroup flat = cyclic_form(3, 0, 1);
  FourManifold s4 = FourManifold::named("S4");
  CHECK_THROWS_WITH_AS(partition_closed(flat, s4), doctest::Contains("DegenerateForm"),
                       Error);
  // with every phase trivial the sum counts gerbes up to equivalence,
  // weighted by automorphisms: the cardinality of Map(S^4, B^2 A)
  CHECK(partition_sum(flat, s4) ==
        CycloValue::from_rational(groupoid_cardinality(PiTower{{{1, 3}}})));
  // same count on the four-torus: 3 * 3^6 / 3^4
  CHECK(partition_sum(flat, FourManifold::named("T4")) == rat_value(27));
}

TEST_CASE("gerbe sum guards and determinism") {
  CHECK_THROWS_WITH_AS(partition_sum(cyclic_form(3, 1, 3), FourManifold::named("K3")),
                       doctest::Contains("TooLarge"), Error);
  MetricGroup m = hyperbolic_z2();
  for (const char* name : {"CP2", "S2xS2", "T4"}) {
    CAPTURE(name);
    FourManifold x = FourManifold::named(name);
    CHECK(partition_sum(m, x, true) == partition_sum(m, x, false));
  }
}
