#include <doctest.h>

#include <random>

#include "tqftkit/abgroup.hpp"
#include "tqftkit/error.hpp"
#include "tqftkit/rational.hpp"

using namespace tqftkit;

namespace {

ZMat zmat_of(std::vector<std::vector<long>> rows) {
  ZMat m(static_cast<long>(rows.size()), rows.empty() ? 0 : static_cast<long>(rows[0].size()));
  for (long r = 0; r < m.rows; ++r)
    for (long c = 0; c < m.cols; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

bool is_diagonal(const ZMat& m) {
  for (long r = 0; r < m.rows; ++r)
    for (long c = 0; c < m.cols; ++c)
      if (r != c && m.at(r, c) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("group construction enforces the invariant-factor chain") {
  CHECK(FinAbGroup::create({2, 4, 8}).order() == 64);
  CHECK(FinAbGroup::trivial().order() == 1);
  CHECK_THROWS_WITH_AS(FinAbGroup::create({4, 2}), doctest::Contains("InvalidGroup"), Error);
  CHECK_THROWS_AS(FinAbGroup::create({1, 2}), Error);
  CHECK_THROWS_AS(FinAbGroup::create({2, 3}), Error);
  CHECK_THROWS_AS(FinAbGroup::create({0}), Error);
}

TEST_CASE("element arithmetic and enumeration") {
  FinAbGroup g = FinAbGroup::create({2, 6});
  CHECK(g.add({1, 5}, {1, 3}) == Elem{0, 2});
  CHECK(g.neg({1, 2}) == Elem{1, 4});
  CHECK(g.scale(7, {1, 5}) == Elem{1, 5});
  CHECK(g.reduce({-1, -1}) == Elem{1, 5});
  for (long long i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
}

TEST_CASE("smith normal form on fixed and random matrices") {
  SUBCASE("fixed") {
    ZMat m = zmat_of({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    SmithResult s = smith_normal_form(m);
    CHECK(is_diagonal(s.d));
    CHECK(zmat_mul(zmat_mul(s.u, m), s.v) == s.d);
    CHECK(abs(zmat_det(s.u)) == 1);
    CHECK(abs(zmat_det(s.v)) == 1);
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 6);
    CHECK(s.d.at(2, 2) == 12);  // det = -144, chain 2 | 6 | 12
  }
  SUBCASE("random, including rectangular and singular") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<long> dim(1, 5), entry(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
      ZMat m(dim(rng), dim(rng));
      for (long r = 0; r < m.rows; ++r)
        for (long c = 0; c < m.cols; ++c) m.at(r, c) = entry(rng);
      SmithResult s = smith_normal_form(m);
      CHECK(is_diagonal(s.d));
      CHECK(zmat_mul(zmat_mul(s.u, m), s.v) == s.d);
      CHECK(abs(zmat_det(s.u)) == 1);
      CHECK(abs(zmat_det(s.v)) == 1);
      long k = std::min(s.d.rows, s.d.cols);
      for (long i = 0; i + 1 < k; ++i) {
        CHECK(s.d.at(i, i) >= 0);
        if (s.d.at(i, i) != 0) {
          CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
        } else {
          CHECK(s.d.at(i + 1, i + 1) == 0);  // zeros sorted last
        }
      }
    }
  }
}

TEST_CASE("cokernel of square integer matrices") {
  SUBCASE("cyclic") {
    Cokernel k = cokernel(zmat_of({{12}}));
    CHECK(k.group.factors == std::vector<long long>{12});
    CHECK(k.projection.at(0, 0) % 12 != 0);
  }
  SUBCASE("unit cokernel") {
    Cokernel k = cokernel(zmat_of({{1, 3}, {2, 5}}));
    CHECK(k.group == FinAbGroup::trivial());
  }
  SUBCASE("singular input rejected") {
    CHECK_THROWS_WITH_AS(cokernel(zmat_of({{2, 4}, {1, 2}})),
                         doctest::Contains("SingularMatrix"), Error);
  }
  SUBCASE("projection kills relations, lifts split the projection") {
    std::mt19937_64 rng(456);
    std::uniform_int_distribution<long> entry(-5, 5);
    int done = 0;
    while (done < 40) {
      ZMat m(3, 3);
      for (long r = 0; r < 3; ++r)
        for (long c = 0; c < 3; ++c) m.at(r, c) = entry(rng);
      Int det = zmat_det(m);
      if (det == 0) continue;
      ++done;
      Cokernel k = cokernel(m);
      CHECK(k.group.order() == to_ll(abs(det)));
      // Columns of m map to zero.
      for (long c = 0; c < 3; ++c) {
        std::vector<Int> col(3);
        for (long r = 0; r < 3; ++r) col[static_cast<std::size_t>(r)] = m.at(r, c);
        std::vector<Int> img = zmat_apply(k.projection, col);
        Elem e(static_cast<std::size_t>(k.group.rank()));
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = to_ll(img[i]);
        CHECK(k.group.is_zero(k.group.reduce(e)));
      }
      // projection(lift(generator_j)) = generator_j.
      for (long j = 0; j < k.group.rank(); ++j) {
        std::vector<Int> lift(3);
        for (long r = 0; r < 3; ++r) lift[static_cast<std::size_t>(r)] = k.lifts.at(r, j);
        std::vector<Int> img = zmat_apply(k.projection, lift);
        Elem e(static_cast<std::size_t>(k.group.rank()));
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = to_ll(img[i]);
        e = k.group.reduce(e);
        for (long i = 0; i < k.group.rank(); ++i)
          CHECK(e[static_cast<std::size_t>(i)] == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("character pairing is biadditive and nondegenerate") {
  FinAbGroup g = FinAbGroup::create({2, 4});
  CHECK(char_pairing(g, {1, 0}, {1, 0}) == PhaseQZ::of(1, 2));
  CHECK(char_pairing(g, {0, 1}, {0, 1}) == PhaseQZ::of(1, 4));
  std::mt19937_64 rng(789);
  std::uniform_int_distribution<long long> pick(0, 7);
  for (int t = 0; t < 30; ++t) {
    Elem x = g.reduce({pick(rng), pick(rng)});
    Elem y = g.reduce({pick(rng), pick(rng)});
    Elem chi = g.reduce({pick(rng), pick(rng)});
    CHECK(char_pairing(g, g.add(x, y), chi) ==
          char_pairing(g, x, chi) + char_pairing(g, y, chi));
    CHECK(char_pairing(g, x, g.add(chi, y)) ==
          char_pairing(g, x, chi) + char_pairing(g, x, y));
  }
  // Only the zero element pairs trivially with every character.
  for (long long i = 0; i < g.order(); ++i) {
    Elem x = g.element_at(i);
    bool all_zero = true;
    for (long long j = 0; j < g.order(); ++j)
      if (!char_pairing(g, x, g.element_at(j)).is_zero()) all_zero = false;
    CHECK(all_zero == g.is_zero(x));
  }
}
