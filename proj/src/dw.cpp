#include "tqftkit/dw.hpp"

#include <map>

#include "tqftkit/cycmat.hpp"
#include "tqftkit/error.hpp"
#include "tqftkit/intmat.hpp"
#include "tqftkit/parallel.hpp"

namespace tqftkit {

namespace {

constexpr long long kBruteForceLimit = 100000000;

long checked_index(long v, long n, const char* what) {
  require(v >= 0 && v < n, "InvalidGroup", std::string(what) + " out of range");
  return v;
}

}  // namespace

FiniteGroup FiniteGroup::create(std::vector<std::vector<long>> table) {
  long n = static_cast<long>(table.size());
  require(n >= 1, "InvalidGroup", "empty multiplication table");
  for (const auto& row : table) {
    require(static_cast<long>(row.size()) == n, "InvalidGroup", "table is not square");
    for (long v : row) checked_index(v, n, "table entry");
  }

  long identity = -1;
  for (long e = 0; e < n; ++e) {
    bool ok = true;
    for (long x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  require(identity >= 0, "InvalidGroup", "no identity element");

  std::vector<long> inv(n, -1);
  for (long x = 0; x < n; ++x) {
    for (long y = 0; y < n; ++y)
      if (table[x][y] == identity && table[y][x] == identity) {
        inv[x] = y;
        break;
      }
    require(inv[x] >= 0, "InvalidGroup", "element has no inverse");
  }

  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y)
      for (long z = 0; z < n; ++z)
        require(table[table[x][y]][z] == table[x][table[y][z]], "InvalidGroup",
                "multiplication is not associative");

  return FiniteGroup(std::move(table), identity, std::move(inv));
}

bool FiniteGroup::is_abelian() const {
  long n = order();
  for (long x = 0; x < n; ++x)
    for (long y = x + 1; y < n; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

long FiniteGroup::element_order(long x) const {
  long p = x, k = 1;
  while (p != identity_) {
    p = mul(p, x);
    ++k;
  }
  return k;
}

FiniteGroup perm_group_closure(long points,
                               const std::vector<std::vector<long>>& gens) {
  for (const auto& p : gens) {
    require(static_cast<long>(p.size()) == points, "InvalidGroup",
            "permutation has wrong length");
    std::vector<bool> hit(points, false);
    for (long v : p) {
      checked_index(v, points, "permutation image");
      require(!hit[v], "InvalidGroup", "not a permutation");
      hit[v] = true;
    }
  }

  std::vector<long> ident(points);
  for (long i = 0; i < points; ++i) ident[i] = i;

  std::map<std::vector<long>, long> index;
  std::vector<std::vector<long>> elems{ident};
  index[ident] = 0;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<long> prod(points);
      for (long i = 0; i < points; ++i) prod[i] = elems[head][g[i]];
      if (index.emplace(prod, static_cast<long>(elems.size())).second) {
        elems.push_back(prod);
        require(elems.size() <= 10000, "TooLarge", "permutation closure too big");
      }
    }
  }

  long n = static_cast<long>(elems.size());
  std::vector<std::vector<long>> table(n, std::vector<long>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      std::vector<long> prod(points);
      for (long p = 0; p < points; ++p) prod[p] = elems[i][elems[j][p]];
      table[i][j] = index.at(prod);
    }
  return FiniteGroup::create(std::move(table));
}

FiniteGroup named_group(const std::string& name) {
  if (name.rfind("Z/", 0) == 0) {
    long n = 0;
    try {
      n = std::stol(name.substr(2));
    } catch (...) {
      fail("ParseError", "bad cyclic group name: " + name);
    }
    require(n >= 1 && n <= 20, "ParseError", "cyclic order must be in 1..20");
    std::vector<std::vector<long>> t(n, std::vector<long>(n));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return FiniteGroup::create(std::move(t));
  }
  if (name == "Z2xZ2") {
    std::vector<std::vector<long>> t(4, std::vector<long>(4));
    for (long i = 0; i < 4; ++i)
      for (long j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return FiniteGroup::create(std::move(t));
  }
  if (name == "S3") return perm_group_closure(3, {{1, 2, 0}, {1, 0, 2}});
  if (name == "D4") return perm_group_closure(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  if (name == "A4") return perm_group_closure(4, {{1, 0, 3, 2}, {1, 2, 0, 3}});
  if (name == "Q8") {
    // element s*4 + a: sign (-1)^s times axis {1, i, j, k}[a]
    const long ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    // ij=k, jk=i, ki=j carry +; squares and the reversed products carry -.
    const long neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<long>> t(8, std::vector<long>(8));
    for (long x = 0; x < 8; ++x)
      for (long y = 0; y < 8; ++y) {
        long s1 = x / 4, a = x % 4, s2 = y / 4, b = y % 4;
        long axis = ax[a][b];
        long sign = (s1 + s2 + neg[a][b]) % 2;
        t[x][y] = sign * 4 + axis;
      }
    return FiniteGroup::create(std::move(t));
  }
  fail("ParseError", "unknown group name: " + name);
}

std::optional<CocycleDefect> cocycle_defect(
    const FiniteGroup& g, const std::vector<std::vector<PhaseQZ>>& c) {
  long n = g.order();
  long e = g.identity();
  for (long x = 0; x < n; ++x) {
    if (!c[e][x].is_zero()) return CocycleDefect{e, x, 0, true};
    if (!c[x][e].is_zero()) return CocycleDefect{x, e, 0, true};
  }
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y)
      for (long z = 0; z < n; ++z) {
        PhaseQZ lhs = c[y][z] - c[g.mul(x, y)][z] + c[x][g.mul(y, z)] - c[x][y];
        if (!lhs.is_zero()) return CocycleDefect{x, y, z, false};
      }
  return std::nullopt;
}

Cocycle2 Cocycle2::create(FiniteGroup g, std::vector<std::vector<PhaseQZ>> c) {
  long n = g.order();
  require(static_cast<long>(c.size()) == n, "InvalidCocycle", "table has wrong shape");
  for (const auto& row : c)
    require(static_cast<long>(row.size()) == n, "InvalidCocycle",
            "table has wrong shape");
  if (auto d = cocycle_defect(g, c)) {
    if (d->normalization)
      fail("InvalidCocycle", "not normalized at (" + std::to_string(d->x) + ", " +
                                 std::to_string(d->y) + ")");
    fail("InvalidCocycle",
         "cocycle identity fails at (" + std::to_string(d->x) + ", " +
             std::to_string(d->y) + ", " + std::to_string(d->z) + ")");
  }
  return Cocycle2(std::move(g), std::move(c));
}

Cocycle2 Cocycle2::zero(FiniteGroup g) {
  long n = g.order();
  std::vector<std::vector<PhaseQZ>> c(n, std::vector<PhaseQZ>(n));
  return Cocycle2(std::move(g), std::move(c));
}

TwistedGroupAlgebra::TwistedGroupAlgebra(Cocycle2 cocycle) : cocycle_(std::move(cocycle)) {
  // Associativity spot checks; the exhaustive cocycle identity already holds.
  long n = group().order();
  for (long t = 0; t < 5; ++t) {
    long x = (t * 7) % n, y = (t * 3 + 1) % n, z = (t * 5 + 2) % n;
    Vec lhs = mul(mul(delta(x), delta(y)), delta(z));
    Vec rhs = mul(delta(x), mul(delta(y), delta(z)));
    for (long i = 0; i < n; ++i)
      require(lhs[i] == rhs[i], "InvalidCocycle", "twisted product is not associative");
  }
}

TwistedGroupAlgebra::Vec TwistedGroupAlgebra::delta(long x) const {
  Vec v(group().order());
  v[x] = CycloValue::one();
  return v;
}

TwistedGroupAlgebra::Vec TwistedGroupAlgebra::mul(const Vec& a, const Vec& b) const {
  const FiniteGroup& g = group();
  long n = g.order();
  require(static_cast<long>(a.size()) == n && static_cast<long>(b.size()) == n,
          "ShapeMismatch", "algebra element has wrong length");
  Vec out(n);
  for (long x = 0; x < n; ++x) {
    if (a[x].is_zero()) continue;
    for (long y = 0; y < n; ++y) {
      if (b[y].is_zero()) continue;
      long xy = g.mul(x, y);
      out[xy] = out[xy] + a[x] * b[y] * CycloValue::root_of_unity(cocycle_.at(x, y));
    }
  }
  return out;
}

CycloValue TwistedGroupAlgebra::trace(const Vec& a) const {
  require(static_cast<long>(a.size()) == group().order(), "ShapeMismatch",
          "algebra element has wrong length");
  return a[group().identity()].scaled(Rat(1) / group().order());
}

std::vector<TwistedGroupAlgebra::Vec> TwistedGroupAlgebra::center_basis() const {
  const FiniteGroup& g = group();
  long n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<Vec> basis;
  for (long root = 0; root < n; ++root) {
    if (seen[root]) continue;
    // Transport a(x y x^{-1}) = a(y) e(c(x,y) - c(x y x^{-1}, x)) over the
    // conjugation orbit; a cycle mismatch kills the whole orbit.
    std::map<long, PhaseQZ> pot;
    pot[root] = PhaseQZ();
    std::vector<long> queue{root};
    bool alive = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      long y = queue[head];
      for (long x = 0; x < n; ++x) {
        long y2 = g.mul(g.mul(x, y), g.inv(x));
        PhaseQZ p = pot[y] + cocycle_.at(x, y) - cocycle_.at(y2, x);
        auto [it, inserted] = pot.emplace(y2, p);
        if (inserted)
          queue.push_back(y2);
        else if (!(it->second == p))
          alive = false;
      }
    }
    for (const auto& [y, p] : pot) seen[y] = true;
    if (!alive) continue;
    Vec z(n);
    for (const auto& [y, p] : pot) z[y] = CycloValue::root_of_unity(p);
    basis.push_back(std::move(z));
  }
  return basis;
}

long algebra_center_dim(const TwistedGroupAlgebra& a) {
  return static_cast<long>(a.center_basis().size());
}

CycloValue frobenius_from_basis(const TwistedGroupAlgebra& a,
                                const std::vector<TwistedGroupAlgebra::Vec>& basis,
                                long genus) {
  require(genus >= 0, "ParseError", "genus must be nonnegative");
  long k = static_cast<long>(basis.size());
  require(k >= 1, "SingularTrace", "empty center basis");

  CMat gram(k, k);
  std::vector<std::vector<TwistedGroupAlgebra::Vec>> prods(k);
  for (long i = 0; i < k; ++i) {
    for (long j = 0; j < k; ++j) {
      prods[i].push_back(a.mul(basis[i], basis[j]));
      gram.at(i, j) = a.trace(prods[i][j]);
    }
  }
  CMat ginv;
  try {
    ginv = cmat_inverse(gram);
  } catch (const Error& e) {
    fail("SingularTrace", "trace pairing is degenerate on the center");
  }

  long n = a.group().order();
  TwistedGroupAlgebra::Vec handle(n);
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) {
      const CycloValue& coeff = ginv.at(j, i);
      if (coeff.is_zero()) continue;
      for (long t = 0; t < n; ++t)
        if (!prods[i][j][t].is_zero()) handle[t] = handle[t] + coeff * prods[i][j][t];
    }

  TwistedGroupAlgebra::Vec acc = a.unit();
  for (long t = 0; t < genus; ++t) acc = a.mul(acc, handle);
  return a.trace(acc);
}

CycloValue frobenius_partition(const TwistedGroupAlgebra& a, long genus) {
  return frobenius_from_basis(a, a.center_basis(), genus);
}

Rat brute_force_surface(const FiniteGroup& g, long genus, bool parallel) {
  require(genus >= 0, "ParseError", "genus must be nonnegative");
  long n = g.order();
  Int total = int_pow(Int(n), static_cast<unsigned long>(2 * genus));
  require(total <= int_of(kBruteForceLimit), "TooLarge", "tuple space exceeds the brute-force cap");
  long long t = to_ll(total);

  auto pred = [&](long long idx) {
    long prod = g.identity();
    long long rest = idx;
    for (long i = 0; i < genus; ++i) {
      long av = static_cast<long>(rest % n);
      rest /= n;
      long bv = static_cast<long>(rest % n);
      rest /= n;
      long comm = g.mul(g.mul(av, bv), g.mul(g.inv(av), g.inv(bv)));
      prod = g.mul(prod, comm);
    }
    return prod == g.identity();
  };
  long long cnt = count_fold(t, pred, parallel);
  return Rat(int_of(cnt)) / n;
}

Rat dim1_partition(const FiniteGroup& g, const std::vector<PhaseQZ>& lambda) {
  long n = g.order();
  require(static_cast<long>(lambda.size()) == n, "NotACharacter",
          "character table has wrong length");
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y)
      require(lambda[g.mul(x, y)] == lambda[x] + lambda[y], "NotACharacter",
              "map is not multiplicative");

  long l = 1;
  for (const PhaseQZ& p : lambda) l = static_cast<long>(lcm_ll(l, to_ll(p.den())));
  PhaseHistogram h(l);
  for (const PhaseQZ& p : lambda)
    h.add(static_cast<long>(to_ll(p.num()) * (l / to_ll(p.den())) % l));
  return h.to_cyclo().rational_value() / n;
}

Rat dw3_invariant(const GroupPresentation& p, const FiniteGroup& g, bool parallel) {
  require(p.generators >= 0, "ParseError", "generator count must be nonnegative");
  for (const RelatorWord& w : p.relators)
    for (const auto& [gen, exp] : w) {
      require(gen >= 0 && gen < p.generators, "ParseError", "relator names a missing generator");
      (void)exp;
    }
  require(p.generators <= 32, "TooLarge", "too many generators");
  long n = g.order();
  Int total = int_pow(Int(n), static_cast<unsigned long>(p.generators));
  require(total <= int_of(kBruteForceLimit), "TooLarge", "tuple space exceeds the brute-force cap");
  long long t = to_ll(total);

  auto power = [&](long x, long e) {
    long base = e >= 0 ? x : g.inv(x);
    long k = e >= 0 ? e : -e;
    long acc = g.identity();
    while (k > 0) {
      if (k & 1) acc = g.mul(acc, base);
      base = g.mul(base, base);
      k >>= 1;
    }
    return acc;
  };
  auto pred = [&](long long idx) {
    long assign[32];
    long long rest = idx;
    for (long i = 0; i < p.generators; ++i) {
      assign[i] = static_cast<long>(rest % n);
      rest /= n;
    }
    for (const RelatorWord& w : p.relators) {
      long el = g.identity();
      for (const auto& [gen, exp] : w) el = g.mul(el, power(assign[gen], exp));
      if (el != g.identity()) return false;
    }
    return true;
  };
  long long cnt = count_fold(t, pred, parallel);
  return Rat(int_of(cnt)) / n;
}

std::vector<std::vector<PhaseQZ>> abelian_characters(const FiniteGroup& g) {
  require(g.is_abelian(), "NonAbelian", "characters require an abelian group");
  long n = g.order();

  // Z^n modulo the multiplication relations e_x + e_y - e_{xy} is G itself;
  // its invariant-factor dual enumerates the characters.
  ZMat m(n, n * n);
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) {
      long col = x * n + y;
      m.at(x, col) += 1;
      m.at(y, col) += 1;
      m.at(g.mul(x, y), col) -= 1;
    }
  SmithResult s = smith_normal_form(m);
  std::vector<long long> d(n);
  Int card = 1;
  for (long i = 0; i < n; ++i) {
    d[i] = to_ll(s.d.at(i, i));
    require(d[i] > 0, "VerificationFailed", "relation matrix lost full rank");
    card *= int_of(d[i]);
  }
  require(card == Int(n), "VerificationFailed", "relation cokernel has wrong order");

  std::vector<std::vector<PhaseQZ>> chars;
  std::vector<long long> tuple(n, 0);
  for (;;) {
    std::vector<PhaseQZ> phi(n);
    for (long x = 0; x < n; ++x) {
      Rat acc = 0;
      for (long i = 0; i < n; ++i) {
        if (d[i] == 1 || tuple[i] == 0) continue;
        acc += Rat(int_of(tuple[i]) * s.u.at(i, x)) / int_of(d[i]);
      }
      phi[x] = PhaseQZ(acc);
    }
    chars.push_back(std::move(phi));

    long i = n - 1;
    while (i >= 0) {
      if (++tuple[i] < d[i]) break;
      tuple[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  require(static_cast<long>(chars.size()) == n, "VerificationFailed",
          "character count mismatch");

  for (const auto& phi : chars)
    for (long x = 0; x < n; ++x)
      for (long y = 0; y < n; ++y)
        require(phi[g.mul(x, y)] == phi[x] + phi[y], "VerificationFailed",
                "enumerated character is not multiplicative");
  return chars;
}

std::vector<CenterSimple> center_simples_abelian(const Cocycle2& c) {
  const FiniteGroup& g = c.group();
  require(g.is_abelian(), "NonAbelian", "abelian center construction");
  long n = g.order();
  auto chars = abelian_characters(g);
  auto lphase = [&](long x, long y) { return c.at(y, x) - c.at(x, y); };

  std::vector<CenterSimple> out;
  for (long x = 0; x < n; ++x)
    for (const auto& chi : chars) {
      CenterSimple s;
      s.x = x;
      s.character.resize(n);
      for (long y = 0; y < n; ++y) s.character[y] = lphase(x, y) + chi[y];
      for (long y = 0; y < n; ++y)
        for (long y2 = 0; y2 < n; ++y2) {
          long yy = g.mul(y2, y);
          PhaseQZ defect = lphase(x, yy) - lphase(x, y) - lphase(x, y2);
          require(s.character[yy] - s.character[y] - s.character[y2] == defect,
                  "VerificationFailed", "twisted character fails its functional equation");
        }
      out.push_back(std::move(s));
    }
  return out;
}

}  // namespace tqftkit
