#include <doctest.h>

#include <complex>
#include <random>

#include "tqftkit/cyclotomic.hpp"
#include "tqftkit/eighthroot.hpp"
#include "tqftkit/error.hpp"
#include "tqftkit/phase.hpp"
#include "tqftkit/rational.hpp"

using namespace tqftkit;

namespace {

CycloValue zeta(long n, long k = 1) { return CycloValue::root_of_unity(n, k); }

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-10) {
  return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(rat_from_string("3/4") == rat(3, 4));
  CHECK(rat_from_string("-2") == rat(-2));
  CHECK(rat_from_string("6/4") == rat(3, 2));
  CHECK_THROWS_WITH_AS(rat_from_string("1/0"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_AS(rat_from_string("a/b"), Error);
  CHECK_THROWS_AS(rat_from_string("1/2/3"), Error);
  CHECK_THROWS_AS(rat_from_string(""), Error);

  CHECK(rat_from_string_strict("3/4") == rat(3, 4));
  CHECK_THROWS_AS(rat_from_string_strict("2/8"), Error);
  CHECK_THROWS_AS(rat_from_string_strict("1/-2"), Error);
}

TEST_CASE("phase arithmetic lives in [0,1)") {
  PhaseQZ a = PhaseQZ::of(3, 4);
  PhaseQZ b = PhaseQZ::of(1, 2);
  CHECK((a + b).value() == rat(1, 4));
  CHECK((a - b).value() == rat(1, 4));
  CHECK((-a).value() == rat(1, 4));
  CHECK(PhaseQZ(rat(-7, 3)).value() == rat(2, 3));
  CHECK(a.times(Int(6)).value() == rat(1, 2));
  CHECK(PhaseQZ(rat(5, 1)).is_zero());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<Int>{Int(-1), Int(1)});
  CHECK(cyclotomic_poly(2) == std::vector<Int>{Int(1), Int(1)});
  CHECK(cyclotomic_poly(4) == std::vector<Int>{Int(1), Int(0), Int(1)});
  CHECK(cyclotomic_poly(8) == std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(1)});
  CHECK(cyclotomic_poly(12) ==
        std::vector<Int>{Int(1), Int(0), Int(-1), Int(0), Int(1)});
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(360) == 96);
}

TEST_CASE("root of unity identities") {
  CHECK(zeta(4) + zeta(4, 3) == CycloValue::zero());
  CHECK(zeta(8) * zeta(8) == zeta(4));
  CHECK((CycloValue::one() + zeta(4)) * (CycloValue::one() - zeta(4)) ==
        CycloValue::from_rational(rat(2)));
  CHECK(zeta(2) == CycloValue::from_rational(rat(-1)));
  CHECK(zeta(6, 3) == CycloValue::from_rational(rat(-1)));
  CHECK(zeta(6) == CycloValue::one() + zeta(3));  // primitive 6th root vs 1 + z3
  // Full sum of n-th roots vanishes for n > 1.
  for (long n : {2L, 3L, 5L, 8L, 12L}) {
    CycloValue s = CycloValue::zero();
    for (long k = 0; k < n; ++k) s = s + zeta(n, k);
    CHECK(s.is_zero());
  }
}

TEST_CASE("exact square roots") {
  for (long n = 1; n <= 30; ++n) {
    CycloValue s = sqrt_of_integer(n);
    CHECK(s * s == CycloValue::from_rational(rat(n)));
    CHECK(s.conjugate() == s);  // real
    CHECK(close(s.to_complex(), {std::sqrt(static_cast<double>(n)), 0.0}));
  }
  // sqrt(3) through the Gauss sum: zeta4^3 * (1 + 2*zeta3).
  CycloValue g = CycloValue::one() + zeta(3).scaled(rat(2));
  CHECK(zeta(4, 3) * g == sqrt_of_integer(3));
}

TEST_CASE("conjugation and norms") {
  CycloValue v = zeta(5) + zeta(5, 4).scaled(rat(2)) + CycloValue::from_rational(rat(1, 3));
  CycloValue n2 = v.norm_squared();
  CHECK(n2.conjugate() == n2);
  CHECK(close(n2.to_complex(), std::norm(v.to_complex()) * std::complex<double>(1, 0)));
  CHECK(v.conjugate().conjugate() == v);
}

TEST_CASE("inverses") {
  for (const CycloValue& v :
       {CycloValue::one() + zeta(5), zeta(8) + CycloValue::from_rational(rat(2)),
        sqrt_of_integer(7), zeta(12, 5).scaled(rat(3, 2)),
        CycloValue::one() + zeta(3) + zeta(9, 2)}) {
    CHECK(v * v.inverse() == CycloValue::one());
  }
  CHECK_THROWS_WITH_AS(CycloValue::zero(4).inverse(), doctest::Contains("DivisionByZero"),
                       Error);
}

TEST_CASE("algebra laws on pseudorandom values") {
  std::mt19937_64 rng(20260822);
  std::uniform_int_distribution<long> ord(1, 12);
  std::uniform_int_distribution<long> coeff(-3, 3);
  auto sample = [&]() {
    long n = ord(rng);
    std::vector<Rat> raw(static_cast<std::size_t>(n));
    for (Rat& r : raw) r = rat(coeff(rng), 1 + (coeff(rng) & 1));
    return CycloValue::from_raw(n, std::move(raw));
  };
  for (int trial = 0; trial < 40; ++trial) {
    CycloValue a = sample(), b = sample(), c = sample();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex(), 1e-9));
    CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex(), 1e-9));
  }
}

TEST_CASE("phase histograms collapse to exact sums") {
  PhaseHistogram h(4);
  h.add(0);
  h.add(2);
  CHECK(h.to_cyclo().is_zero());  // 1 + zeta4^2 = 0
  PhaseHistogram g(8);
  g.add(1, 3);
  g.add(5, 1);
  CHECK(g.to_cyclo() == zeta(8).scaled(rat(2)));  // 3*z8 + z8^5 = 2*z8
}

TEST_CASE("eighth-root recognition") {
  EighthRootForm f = recognize_eighth_root(CycloValue::one() + zeta(4));
  CHECK(f == make_eighth_root(rat(1), 2, 1, 1));
  CHECK(recognize_eighth_root(CycloValue::from_rational(rat(2))) ==
        make_eighth_root(rat(2), 1, 0, 0));
  CHECK(recognize_eighth_root(CycloValue::from_rational(rat(-5, 3))) ==
        make_eighth_root(rat(5, 3), 1, 0, 4));
  CHECK(recognize_eighth_root(sqrt_of_integer(12)) == make_eighth_root(rat(2), 3, 1, 0));
  CHECK_THROWS_WITH_AS(recognize_eighth_root(zeta(3)), doctest::Contains("NotEighthRootForm"),
                       Error);
  CHECK_THROWS_AS(recognize_eighth_root(CycloValue::zero()), Error);
  CHECK_THROWS_AS(recognize_eighth_root(CycloValue::one() + zeta(5)), Error);

  // Round trips across every octant, with and without a surd.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(1, 9);
  for (int s = 0; s < 8; ++s) {
    for (long m : {1L, 2L, 5L, 6L}) {
      EighthRootForm want = make_eighth_root(rat(num(rng), num(rng)), m, m == 1 ? 0 : 1, s);
      CHECK(recognize_eighth_root(want.expand()) == want);
    }
  }
}

TEST_CASE("float shadows agree with exact values") {
  CHECK(close(zeta(8).to_complex(), std::polar(1.0, 3.14159265358979323846 / 4)));
  EighthRootForm f = make_eighth_root(rat(2), 2, 1, 1);
  CHECK(close(f.to_complex(), {2.0, 2.0}));
}
