#include "tqftkit/groupoid.hpp"

#include <map>
#include <tuple>

#include "tqftkit/error.hpp"

namespace tqftkit {

Rat groupoid_cardinality(const PiTower& t) {
  Rat total = 0;
  for (const auto& comp : t.components) {
    Rat term = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      require(comp[i] >= 1, "InvalidGroupoid", "homotopy group order must be positive");
      // 1-based: pi_1 divides, pi_2 multiplies, ..
      if (i % 2 == 0)
        term /= int_of(comp[i]);
      else
        term *= int_of(comp[i]);
    }
    total += term;
  }
  return total;
}

ActionGroupoid ActionGroupoid::create(FiniteGroup g, std::vector<std::vector<long>> action) {
  long n = g.order();
  require(static_cast<long>(action.size()) == n, "InvalidGroupoid",
          "action table has wrong shape");
  require(!action.empty() && !action[0].empty(), "InvalidGroupoid", "empty point set");
  long p = static_cast<long>(action[0].size());
  for (const auto& row : action) {
    require(static_cast<long>(row.size()) == p, "InvalidGroupoid",
            "action table has wrong shape");
    for (long v : row)
      require(v >= 0 && v < p, "InvalidGroupoid", "action image out of range");
  }
  for (long s = 0; s < p; ++s)
    require(action[g.identity()][s] == s, "InvalidGroupoid",
            "identity fails to act trivially");
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long s = 0; s < p; ++s)
        require(action[g.mul(a, b)][s] == action[a][action[b][s]], "InvalidGroupoid",
                "action is not associative");
  return ActionGroupoid(std::move(g), std::move(action), p);
}

long ActionGroupoid::orbit_count() const {
  std::vector<bool> seen(points_, false);
  long orbits = 0;
  for (long s = 0; s < points_; ++s) {
    if (seen[s]) continue;
    ++orbits;
    std::vector<long> queue{s};
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (long g = 0; g < group_.order(); ++g) {
        long t = act(g, queue[head]);
        if (!seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
  }
  return orbits;
}

ActionGroupoid ActionGroupoid::trivial() {
  return bun_groupoid("point", named_group("Z/1"));
}

ActionGroupoid bun_groupoid(const std::string& space, FiniteGroup g) {
  long n = g.order();
  if (space == "point") {
    std::vector<std::vector<long>> action(n, std::vector<long>(1, 0));
    return ActionGroupoid::create(std::move(g), std::move(action));
  }
  if (space == "circle") {
    std::vector<std::vector<long>> action(n, std::vector<long>(n));
    for (long a = 0; a < n; ++a)
      for (long s = 0; s < n; ++s) action[a][s] = g.mul(g.mul(a, s), g.inv(a));
    return ActionGroupoid::create(std::move(g), std::move(action));
  }
  fail("ParseError", "unknown space: " + space);
}

LocalSystem LocalSystem::create(ActionGroupoid g, std::vector<long> dims,
                                std::vector<std::vector<CMat>> rho) {
  long n = g.group().order();
  long p = g.points();
  require(static_cast<long>(dims.size()) == p, "ShapeMismatch",
          "one fiber dimension per point");
  for (long d : dims) require(d >= 0, "ShapeMismatch", "negative fiber dimension");
  require(static_cast<long>(rho.size()) == n, "ShapeMismatch", "one matrix row per arrow");
  for (long a = 0; a < n; ++a) {
    require(static_cast<long>(rho[a].size()) == p, "ShapeMismatch",
            "one matrix row per arrow");
    for (long s = 0; s < p; ++s)
      require(rho[a][s].rows == dims[g.act(a, s)] && rho[a][s].cols == dims[s],
              "ShapeMismatch", "arrow matrix has wrong shape");
  }
  long e = g.group().identity();
  for (long s = 0; s < p; ++s)
    require(rho[e][s] == cmat_identity(dims[s]), "InvalidGroupoid",
            "identity arrow is not the identity map");
  return LocalSystem{std::move(g), std::move(dims), std::move(rho)};
}

std::optional<FunctorialityDefect> functoriality_defect(const LocalSystem& ls) {
  const ActionGroupoid& gr = ls.groupoid;
  long n = gr.group().order();
  for (long g = 0; g < n; ++g)
    for (long h = 0; h < n; ++h)
      for (long s = 0; s < gr.points(); ++s) {
        CMat lhs = ls.rho[gr.group().mul(g, h)][s];
        CMat rhs = cmat_mul(ls.rho[g][gr.act(h, s)], ls.rho[h][s]);
        if (!(lhs == rhs)) return FunctorialityDefect{g, h, s};
      }
  return std::nullopt;
}

LocalSystem unit_system() {
  return constant_system(bun_groupoid("point", named_group("Z/1")), 1);
}

LocalSystem constant_system(ActionGroupoid g, long d) {
  long n = g.group().order();
  long p = g.points();
  std::vector<std::vector<CMat>> rho(n, std::vector<CMat>(p, cmat_identity(d)));
  return LocalSystem::create(std::move(g), std::vector<long>(p, d), std::move(rho));
}

long sum1_limit(const LocalSystem& ls) {
  const ActionGroupoid& gr = ls.groupoid;
  long n = gr.group().order();
  CycloValue acc = CycloValue::zero();
  for (long g = 0; g < n; ++g)
    for (long s = 0; s < gr.points(); ++s)
      if (gr.act(g, s) == s) acc = acc + cmat_trace(ls.rho[g][s]);
  acc = acc.scaled(Rat(1, n));
  require(acc.is_rational(), "NonIntegerDimension", "invariant dimension is irrational");
  Rat v = acc.rational_value();
  require(v.get_den() == 1 && v >= 0, "NonIntegerDimension",
          "invariant dimension is not a nonnegative integer");
  return to_ll(v.get_num());
}

namespace {

std::vector<long> fiber_offsets(const LocalSystem& ls, long* total) {
  std::vector<long> off(ls.dims.size() + 1, 0);
  for (std::size_t s = 0; s < ls.dims.size(); ++s) off[s + 1] = off[s] + ls.dims[s];
  *total = off.back();
  return off;
}

CMat averaging_projector(const LocalSystem& ls) {
  const ActionGroupoid& gr = ls.groupoid;
  long n = gr.group().order();
  long total = 0;
  std::vector<long> off = fiber_offsets(ls, &total);
  CMat p(total, total);
  Rat w(1, n);
  for (long g = 0; g < n; ++g)
    for (long s = 0; s < gr.points(); ++s) {
      long t = gr.act(g, s);
      const CMat& m = ls.rho[g][s];
      for (long r = 0; r < m.rows; ++r)
        for (long c = 0; c < m.cols; ++c)
          p.at(off[t] + r, off[s] + c) =
              p.at(off[t] + r, off[s] + c) + m.at(r, c).scaled(w);
    }
  return p;
}

}  // namespace

CMat invariant_basis(const LocalSystem& ls) {
  CMat p = averaging_projector(ls);
  CMat red = p;
  std::vector<long> pivots = cmat_rref(red);
  CMat basis(p.rows, static_cast<long>(pivots.size()));
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (long i = 0; i < p.rows; ++i) basis.at(i, static_cast<long>(j)) = p.at(i, pivots[j]);
  return basis;
}

namespace {

void check_correspondence(const LocalSystem& x, const LocalSystem& y,
                          const Correspondence& corr) {
  const FiniteGroup& gc = corr.mid.group();
  long n = gc.order();
  long p = corr.mid.points();
  require(static_cast<long>(corr.px.size()) == p && static_cast<long>(corr.py.size()) == p,
          "ShapeMismatch", "one downstairs point per middle point");
  require(static_cast<long>(corr.hx.size()) == n && static_cast<long>(corr.hy.size()) == n,
          "ShapeMismatch", "one downstairs arrow per middle arrow");
  require(static_cast<long>(corr.phi.size()) == p, "ShapeMismatch",
          "one linear map per middle point");
  for (long s = 0; s < p; ++s) {
    require(corr.px[s] >= 0 && corr.px[s] < x.groupoid.points(), "ShapeMismatch",
            "source point map out of range");
    require(corr.py[s] >= 0 && corr.py[s] < y.groupoid.points(), "ShapeMismatch",
            "target point map out of range");
  }
  for (long g = 0; g < n; ++g) {
    require(corr.hx[g] >= 0 && corr.hx[g] < x.groupoid.group().order(), "ShapeMismatch",
            "source group map out of range");
    require(corr.hy[g] >= 0 && corr.hy[g] < y.groupoid.group().order(), "ShapeMismatch",
            "target group map out of range");
  }
  for (long g = 0; g < n; ++g)
    for (long h = 0; h < n; ++h) {
      require(corr.hx[gc.mul(g, h)] == x.groupoid.group().mul(corr.hx[g], corr.hx[h]),
              "IncompatibleSystems", "source group map is not a homomorphism");
      require(corr.hy[gc.mul(g, h)] == y.groupoid.group().mul(corr.hy[g], corr.hy[h]),
              "IncompatibleSystems", "target group map is not a homomorphism");
    }
  for (long g = 0; g < n; ++g)
    for (long s = 0; s < p; ++s) {
      require(corr.px[corr.mid.act(g, s)] == x.groupoid.act(corr.hx[g], corr.px[s]),
              "IncompatibleSystems", "source map is not equivariant");
      require(corr.py[corr.mid.act(g, s)] == y.groupoid.act(corr.hy[g], corr.py[s]),
              "IncompatibleSystems", "target map is not equivariant");
    }
  for (long s = 0; s < p; ++s)
    require(corr.phi[s].rows == y.dims[corr.py[s]] && corr.phi[s].cols == x.dims[corr.px[s]],
            "IncompatibleSystems", "fiber map has wrong shape");
  for (long g = 0; g < n; ++g)
    for (long s = 0; s < p; ++s) {
      CMat lhs = cmat_mul(corr.phi[corr.mid.act(g, s)], x.rho[corr.hx[g]][corr.px[s]]);
      CMat rhs = cmat_mul(y.rho[corr.hy[g]][corr.py[s]], corr.phi[s]);
      require(lhs == rhs, "IncompatibleSystems", "fiber maps fail to intertwine");
    }
}

}  // namespace

Correspondence identity_correspondence(const LocalSystem& x) {
  Correspondence corr;
  corr.mid = x.groupoid;
  long n = x.groupoid.group().order();
  long p = x.groupoid.points();
  corr.px.resize(p);
  corr.py.resize(p);
  for (long s = 0; s < p; ++s) corr.px[s] = corr.py[s] = s;
  corr.hx.resize(n);
  corr.hy.resize(n);
  for (long g = 0; g < n; ++g) corr.hx[g] = corr.hy[g] = g;
  for (long s = 0; s < p; ++s) corr.phi.push_back(cmat_identity(x.dims[s]));
  return corr;
}

CMat sum1_push(const LocalSystem& x, const LocalSystem& y, const Correspondence& corr) {
  check_correspondence(x, y, corr);

  CMat bx = invariant_basis(x);
  CMat by = invariant_basis(y);
  long kx = bx.cols, ky = by.cols;

  long totx = 0, toty = 0;
  std::vector<long> offx = fiber_offsets(x, &totx);
  std::vector<long> offy = fiber_offsets(y, &toty);

  long nc = corr.mid.group().order();
  long ny = y.groupoid.group().order();
  Rat weight(1, nc);

  // pushed[.][j]: the j-th basis section summed over the homotopy fiber
  CMat pushed(toty, kx);
  for (long c = 0; c < corr.mid.points(); ++c) {
    long sx = corr.px[c];
    long sy = corr.py[c];
    for (long eta = 0; eta < ny; ++eta) {
      long t = y.groupoid.act(eta, sy);
      CMat moved = cmat_mul(y.rho[eta][sy], corr.phi[c]);
      for (long r = 0; r < moved.rows; ++r)
        for (long col = 0; col < moved.cols; ++col) {
          const CycloValue& m = moved.at(r, col);
          if (m.is_zero()) continue;
          for (long j = 0; j < kx; ++j) {
            const CycloValue& v = bx.at(offx[sx] + col, j);
            if (v.is_zero()) continue;
            pushed.at(offy[t] + r, j) = pushed.at(offy[t] + r, j) + (m * v).scaled(weight);
          }
        }
    }
  }

  // coordinates in the invariant basis of y
  if (ky == 0) return CMat(0, kx);
  CMat aug(toty, ky + kx);
  for (long i = 0; i < toty; ++i) {
    for (long j = 0; j < ky; ++j) aug.at(i, j) = by.at(i, j);
    for (long j = 0; j < kx; ++j) aug.at(i, ky + j) = pushed.at(i, j);
  }
  std::vector<long> pivots = cmat_rref(aug);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    require(static_cast<long>(i) < ky && pivots[i] == static_cast<long>(i),
            "VerificationFailed", "pushed section left the invariant subspace");
  CMat out(ky, kx);
  for (long i = 0; i < static_cast<long>(pivots.size()) && i < ky; ++i)
    for (long j = 0; j < kx; ++j) out.at(i, j) = aug.at(i, ky + j);
  return out;
}

Correspondence compose_correspondences(const LocalSystem& y, const Correspondence& a,
                                       const Correspondence& b) {
  const FiniteGroup& ga = a.mid.group();
  const FiniteGroup& gb = b.mid.group();
  const FiniteGroup& gy = y.groupoid.group();
  long na = ga.order(), nb = gb.order(), ny = gy.order();

  // product group, index i * nb + j
  std::vector<std::vector<long>> ptable(na * nb, std::vector<long>(na * nb));
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < nb; ++j)
      for (long k = 0; k < na; ++k)
        for (long l = 0; l < nb; ++l)
          ptable[i * nb + j][k * nb + l] = ga.mul(i, k) * nb + gb.mul(j, l);
  FiniteGroup prod = FiniteGroup::create(std::move(ptable));

  // objects (sa, eta, sb) with eta.(a target point) = (b source point)
  std::vector<std::tuple<long, long, long>> objs;
  std::map<std::tuple<long, long, long>, long> index;
  for (long sa = 0; sa < a.mid.points(); ++sa)
    for (long eta = 0; eta < ny; ++eta)
      for (long sb = 0; sb < b.mid.points(); ++sb)
        if (y.groupoid.act(eta, a.py[sa]) == b.px[sb]) {
          index[{sa, eta, sb}] = static_cast<long>(objs.size());
          objs.emplace_back(sa, eta, sb);
        }
  require(!objs.empty(), "IncompatibleSystems", "empty homotopy fiber product");

  std::vector<std::vector<long>> action(na * nb, std::vector<long>(objs.size()));
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < nb; ++j)
      for (std::size_t o = 0; o < objs.size(); ++o) {
        auto [sa, eta, sb] = objs[o];
        long neta = gy.mul(gy.mul(b.hx[j], eta), gy.inv(a.hy[i]));
        action[i * nb + j][o] = index.at({a.mid.act(i, sa), neta, b.mid.act(j, sb)});
      }

  Correspondence out;
  out.mid = ActionGroupoid::create(std::move(prod), std::move(action));
  for (auto [sa, eta, sb] : objs) {
    out.px.push_back(a.px[sa]);
    out.py.push_back(b.py[sb]);
    out.phi.push_back(cmat_mul(b.phi[sb], cmat_mul(y.rho[eta][a.py[sa]], a.phi[sa])));
  }
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < nb; ++j) {
      out.hx.push_back(a.hx[i]);
      out.hy.push_back(b.hy[j]);
    }
  return out;
}

}  // namespace tqftkit
