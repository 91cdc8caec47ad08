#include "tqftkit/jobs.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "tqftkit/dw.hpp"
#include "tqftkit/error.hpp"
#include "tqftkit/groupoid.hpp"
#include "tqftkit/lattice.hpp"
#include "tqftkit/ratmat.hpp"
#include "tqftkit/tqft3.hpp"
#include "tqftkit/tqft4.hpp"

namespace tqftkit {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& msg) { fail("SchemaError", msg); }

[[noreturn]] void schema_fail_at(const std::string& msg, long line) {
  fail("SchemaError", msg + " at line " + std::to_string(line));
}

// ---- payload accessors ------------------------------------------------

const TomlValue* find2(const TomlDoc& d, const std::string& a, const std::string& b) {
  const TomlValue* v = d.find(a);
  return v ? v : d.find(b);
}

const TomlValue& need(const TomlDoc& d, const std::string& key) {
  const TomlValue* v = d.find(key);
  if (!v) schema_fail("missing key '" + key + "'");
  return *v;
}

std::string get_string(const TomlValue& v, const std::string& key) {
  if (v.kind != TomlValue::Kind::String)
    schema_fail_at("'" + key + "' must be a string", v.line);
  return v.str;
}

long long get_int(const TomlValue& v, const std::string& key) {
  if (v.kind != TomlValue::Kind::Integer)
    schema_fail_at("'" + key + "' must be an integer", v.line);
  return v.integer;
}

std::vector<long long> get_int_array(const TomlValue& v, const std::string& key) {
  if (v.kind != TomlValue::Kind::Array)
    schema_fail_at("'" + key + "' must be an array", v.line);
  std::vector<long long> out;
  for (const TomlValue& e : v.array) out.push_back(get_int(e, key));
  return out;
}

ZMat get_int_matrix(const TomlValue& v, const std::string& key) {
  if (v.kind != TomlValue::Kind::Array)
    schema_fail_at("'" + key + "' must be an array of rows", v.line);
  std::vector<std::vector<long long>> rows;
  for (const TomlValue& r : v.array) rows.push_back(get_int_array(r, key));
  long n = static_cast<long>(rows.size());
  long c = n == 0 ? 0 : static_cast<long>(rows[0].size());
  for (const auto& r : rows)
    if (static_cast<long>(r.size()) != c)
      schema_fail_at("'" + key + "' rows must all have the same length", v.line);
  ZMat m(n, c);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < c; ++j)
      m.at(i, j) = int_of(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

PhaseQZ parse_phase(const std::string& s, const std::string& key, long line) {
  if (s == "0") return PhaseQZ();
  auto bad = [&]() -> PhaseQZ {
    schema_fail_at("'" + key + "' phase '" + s + "' must be \"0\" or a fraction \"p/q\"",
                   line);
  };
  std::size_t slash = s.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= s.size()) return bad();
  long long num = 0, den = 0;
  try {
    std::size_t used = 0;
    num = std::stoll(s.substr(0, slash), &used);
    if (used != slash) return bad();
    std::string dpart = s.substr(slash + 1);
    den = std::stoll(dpart, &used);
    if (used != dpart.size()) return bad();
  } catch (const std::exception&) {
    return bad();
  }
  if (den < 1 || num < 0 || num >= den)
    schema_fail_at("'" + key + "' phase '" + s + "' must lie in [0,1)", line);
  if (std::gcd(num, den) != 1)
    schema_fail_at("'" + key + "' has a non-reduced fraction '" + s + "'", line);
  return PhaseQZ::of(static_cast<long>(num), static_cast<long>(den));
}

std::vector<PhaseQZ> get_phase_array(const TomlValue& v, const std::string& key) {
  if (v.kind != TomlValue::Kind::Array)
    schema_fail_at("'" + key + "' must be an array of phase strings", v.line);
  std::vector<PhaseQZ> out;
  for (const TomlValue& e : v.array)
    out.push_back(parse_phase(get_string(e, key), key, e.line));
  return out;
}

std::vector<std::vector<PhaseQZ>> get_phase_rows(const TomlValue& v, const std::string& key) {
  if (v.kind != TomlValue::Kind::Array)
    schema_fail_at("'" + key + "' must be an array of rows", v.line);
  std::vector<std::vector<PhaseQZ>> out;
  for (const TomlValue& r : v.array) out.push_back(get_phase_array(r, key));
  return out;
}

// ---- name catalogs ----------------------------------------------------

bool is_named_lattice(const std::string& s) {
  return s == "A1" || s == "A2" || s == "E8" || s == "U" || s == "A1(-1)";
}

bool is_named_manifold(const std::string& s) {
  return s == "S4" || s == "CP2" || s == "CP2bar" || s == "S2xS2" || s == "T4" ||
         s == "K3";
}

bool is_named_group(const std::string& s) {
  if (s == "Z2xZ2" || s == "S3" || s == "D4" || s == "A4" || s == "Q8") return true;
  if (s.rfind("Z/", 0) != 0) return false;
  std::string rest = s.substr(2);
  if (rest.empty() || rest.size() > 2) return false;
  for (char c : rest)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  int n = std::stoi(rest);
  return n >= 1 && n <= 20;
}

// ---- shared payload fragments -----------------------------------------

using KeySet = std::set<std::string>;

void allow(KeySet& ks, std::initializer_list<const char*> keys, const char* table) {
  for (const char* k : keys) {
    ks.insert(k);
    ks.insert(std::string(table) + "." + k);
  }
}

void no_unknown_keys(const TomlDoc& d, const KeySet& allowed) {
  for (const TomlEntry& e : d.entries) {
    if (e.key == "command") continue;
    if (!allowed.count(e.key)) schema_fail_at("unknown key '" + e.key + "'", e.line);
  }
}

void metric_keys(KeySet& ks) { allow(ks, {"lattice", "factors", "q_diag", "b"}, "metric"); }

void validate_metric(const TomlDoc& d) {
  const TomlValue* lat = find2(d, "metric.lattice", "lattice");
  const TomlValue* fac = find2(d, "metric.factors", "factors");
  if (lat && fac) schema_fail("give either a lattice name or explicit factors, not both");
  if (lat) {
    std::string name = get_string(*lat, "lattice");
    if (!is_named_lattice(name)) schema_fail_at("unknown lattice '" + name + "'", lat->line);
    if (find2(d, "metric.q_diag", "q_diag") || find2(d, "metric.b", "b"))
      schema_fail("'q_diag' and 'b' only apply to explicit factors");
    return;
  }
  if (!fac) schema_fail("metric needs 'lattice' or 'factors'");
  std::vector<long long> factors = get_int_array(*fac, "factors");
  if (factors.empty()) schema_fail_at("'factors' must not be empty", fac->line);
  for (long long f : factors)
    if (f < 1) schema_fail_at("'factors' entries must be positive", fac->line);
  long rank = static_cast<long>(factors.size());
  if (const TomlValue* q = find2(d, "metric.q_diag", "q_diag")) {
    if (static_cast<long>(get_phase_array(*q, "q_diag").size()) != rank)
      schema_fail_at("'q_diag' needs one phase per factor", q->line);
  }
  if (const TomlValue* b = find2(d, "metric.b", "b")) {
    auto rows = get_phase_rows(*b, "b");
    if (static_cast<long>(rows.size()) != rank)
      schema_fail_at("'b' needs one row per factor", b->line);
    for (long i = 0; i < rank; ++i)
      if (static_cast<long>(rows[static_cast<std::size_t>(i)].size()) != rank - 1 - i)
        schema_fail_at("'b' rows must list the entries above the diagonal", b->line);
  }
}

MetricGroup metric_from(const TomlDoc& d) {
  if (const TomlValue* lat = find2(d, "metric.lattice", "lattice"))
    return discriminant_form(named_lattice(lat->str));
  std::vector<long long> factors =
      get_int_array(*find2(d, "metric.factors", "factors"), "factors");
  long rank = static_cast<long>(factors.size());
  std::vector<PhaseQZ> q(static_cast<std::size_t>(rank));
  if (const TomlValue* qv = find2(d, "metric.q_diag", "q_diag"))
    q = get_phase_array(*qv, "q_diag");
  std::vector<std::vector<PhaseQZ>> off(static_cast<std::size_t>(rank));
  for (long i = 0; i < rank; ++i)
    off[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(rank - 1 - i));
  if (const TomlValue* bv = find2(d, "metric.b", "b")) off = get_phase_rows(*bv, "b");
  return MetricGroup::from_cyclic(factors, q, off);
}

void lattice_keys(KeySet& ks) { allow(ks, {"lattice", "gram"}, "lattice"); }

void validate_lattice(const TomlDoc& d) {
  const TomlValue* name = find2(d, "lattice.lattice", "lattice");
  const TomlValue* gram = find2(d, "lattice.gram", "gram");
  if (name && gram) schema_fail("give either a lattice name or a Gram matrix, not both");
  if (name) {
    std::string s = get_string(*name, "lattice");
    if (!is_named_lattice(s)) schema_fail_at("unknown lattice '" + s + "'", name->line);
    return;
  }
  if (!gram) schema_fail("need 'lattice' or 'gram'");
  ZMat g = get_int_matrix(*gram, "gram");
  if (g.rows != g.cols) schema_fail_at("'gram' must be square", gram->line);
  if (!zmat_is_symmetric(g)) schema_fail_at("'gram' must be symmetric", gram->line);
}

EvenLattice lattice_from(const TomlDoc& d) {
  if (const TomlValue* name = find2(d, "lattice.lattice", "lattice"))
    return named_lattice(name->str);
  return EvenLattice::create(get_int_matrix(*find2(d, "lattice.gram", "gram"), "gram"));
}

void manifold_keys(KeySet& ks) { allow(ks, {"name", "b1", "intersection"}, "fourmanifold"); }

void validate_manifold(const TomlDoc& d) {
  const TomlValue* name = find2(d, "fourmanifold.name", "name");
  const TomlValue* b1 = find2(d, "fourmanifold.b1", "b1");
  const TomlValue* q = find2(d, "fourmanifold.intersection", "intersection");
  if (name) {
    std::string s = get_string(*name, "name");
    if (!is_named_manifold(s)) schema_fail_at("unknown manifold '" + s + "'", name->line);
    if (b1 || q) schema_fail("a named manifold takes no further data");
    return;
  }
  if (!b1 || !q) schema_fail("manifold needs 'name' or both 'b1' and 'intersection'");
  if (get_int(*b1, "b1") < 0) schema_fail_at("'b1' must be nonnegative", b1->line);
  ZMat m = get_int_matrix(*q, "intersection");
  if (m.rows != m.cols) schema_fail_at("'intersection' must be square", q->line);
  if (!zmat_is_symmetric(m)) schema_fail_at("'intersection' must be symmetric", q->line);
}

FourManifold manifold_from(const TomlDoc& d) {
  if (const TomlValue* name = find2(d, "fourmanifold.name", "name"))
    return FourManifold::named(name->str);
  return FourManifold::create(
      "custom", get_int(*find2(d, "fourmanifold.b1", "b1"), "b1"),
      get_int_matrix(*find2(d, "fourmanifold.intersection", "intersection"),
                     "intersection"));
}

// relator words: letters a..z index the generators, each optionally raised
// to a signed integer power ("aba^-1b^-1")
RelatorWord parse_word(const std::string& s, long generators, long line) {
  RelatorWord word;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c < 'a' || c > 'z')
      schema_fail_at("relator '" + s + "' has a bad letter '" + std::string(1, c) + "'",
                     line);
    long idx = c - 'a';
    if (idx >= generators)
      schema_fail_at("relator '" + s + "' uses a generator past the declared count", line);
    ++i;
    long exp = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < s.size() && s[i] == '-') ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start || (s[start] == '-' && i == start + 1))
        schema_fail_at("relator '" + s + "' has a malformed exponent", line);
      exp = std::stol(s.substr(start, i - start));
    }
    word.push_back({idx, exp});
  }
  return word;
}

// ---- result rendering -------------------------------------------------

std::string phase_str(const PhaseQZ& p) {
  return p.is_zero() ? std::string("0") : rat_str(p.value());
}

Json float_pair(const std::complex<double>& z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json cyclo_json(const CycloValue& v) {
  Json j;
  j["value"] = v.str();
  if (v.is_rational())
    j["rational"] = rat_str(v.rational_value());
  else
    j["rational"] = nullptr;
  j["float"] = float_pair(v.to_complex());
  return j;
}

CMat conj_transpose(const CMat& m) {
  CMat out(m.cols, m.rows);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j).conjugate();
  return out;
}

struct Ctx {
  const TomlDoc& d;
  const JobOptions& opts;
  Json result = Json::object();
  Json checks = Json::array();

  void check(const std::string& name, bool ok) {
    require(ok, "VerificationFailed", "check failed: " + name);
    checks.push_back(Json{{"name", name}, {"status", "pass"}});
  }
};

// ---- commands ---------------------------------------------------------

void validate_lattice_info(const TomlDoc& d) {
  KeySet ks;
  lattice_keys(ks);
  no_unknown_keys(d, ks);
  validate_lattice(d);
}

void run_lattice_info(Ctx& ctx) {
  EvenLattice l = lattice_from(ctx.d);
  auto [pos, neg] = signature_pair(l);
  ctx.result["rank"] = l.rank();
  ctx.result["det"] = l.det().get_str();
  ctx.result["signature"] = Json{{"pos", pos}, {"neg", neg}, {"value", pos - neg}};
  MetricGroup disc = discriminant_form(l);
  Json q = Json::array();
  for (const PhaseQZ& p : disc.q_diag()) q.push_back(phase_str(p));
  ctx.result["discriminant"] =
      Json{{"order", disc.order()}, {"factors", disc.group().factors}, {"q_diag", q}};
  int ms = milgram_signature(disc);
  ctx.result["milgram"] = ms;
  ctx.check("Milgram signature matches the lattice signature mod 8",
            (((pos - neg - ms) % 8) + 8) % 8 == 0);
}

void validate_gauss(const TomlDoc& d) {
  KeySet ks;
  metric_keys(ks);
  no_unknown_keys(d, ks);
  validate_metric(d);
}

void run_gauss(Ctx& ctx) {
  MetricGroup m = metric_from(ctx.d);
  CycloValue g = gauss_sum(m, ctx.opts.parallel);
  ctx.result["order"] = m.order();
  ctx.result["sum"] = cyclo_json(g);
  try {
    ctx.result["eighth_root"] = recognize_eighth_root(g).str();
  } catch (const Error&) {
    ctx.result["eighth_root"] = nullptr;
  }
  if (ctx.opts.verify)
    ctx.check("parallel fold matches the serial fold", g == gauss_sum(m, false));
}

void run_milgram(Ctx& ctx) {
  MetricGroup m = metric_from(ctx.d);
  int s = milgram_signature(m);
  ctx.result["signature"] = s;
  ctx.result["order"] = m.order();
  if (ctx.opts.verify) {
    auto [sf, c] = squarefree_split(static_cast<long>(m.order()));
    EighthRootForm f = make_eighth_root(Rat(c), sf, sf == 1 ? 0 : 1, s);
    ctx.check("closed form reproduces the Gauss sum",
              f.expand() == gauss_sum(m, ctx.opts.parallel));
  }
}

void validate_tower(const TomlDoc& d) {
  KeySet ks;
  lattice_keys(ks);
  ks.insert("n");
  no_unknown_keys(d, ks);
  validate_lattice(d);
  if (get_int(need(d, "n"), "n") < 1) schema_fail("'n' must be at least 1");
}

void run_tower(Ctx& ctx) {
  EvenLattice l = lattice_from(ctx.d);
  long n = static_cast<long>(get_int(need(ctx.d, "n"), "n"));
  ApproxTower tw = approximation_tower(l, n);
  Int f = abs(l.det());
  Int nd = int_pow(Int(n), static_cast<unsigned long>(l.rank()));
  ctx.result["n"] = n;
  ctx.result["cardinalities"] = Json{{"t_star", std::to_string(tw.t_star.order())},
                                     {"t_nf", std::to_string(tw.t_nf.order())},
                                     {"frac", std::to_string(tw.frac.order())}};
  Int fn = f * nd;
  Int fnn = fn * nd;
  ctx.result["expected"] = Json{
      {"t_star", nd.get_str()}, {"t_nf", fn.get_str()}, {"frac", fnn.get_str()}};
  ctx.check("torsion layer has n^d points", int_of(tw.t_star.order()) == nd);
  ctx.check("divided layer has #F n^d points", int_of(tw.t_nf.order()) == fn);
  ctx.check("fractional layer has #F n^2d points", int_of(tw.frac.order()) == fnn);
  ctx.check("fractional polarization is perfect", duality_check(tw).perfect);
}

void run_center_check(Ctx& ctx) {
  EvenLattice l = lattice_from(ctx.d);
  long n = static_cast<long>(get_int(need(ctx.d, "n"), "n"));
  CenterForm cf = center_form(l, n);
  ctx.result["order"] = cf.c.order();
  ctx.result["factor_t_order"] = cf.factor_t.order();
  ctx.result["factor_f_order"] = cf.factor_f.order();
  ctx.result["sign_t"] = cf.sign_t;
  ctx.result["sign_f"] = cf.sign_f;
  ctx.check("center polarization is perfect", cf.c.is_nondegenerate());
  bool orth = true;
  for (const Elem& x : cf.factor_t.generators)
    for (const Elem& y : cf.factor_f.generators)
      if (!cf.c.b(x, y).is_zero()) orth = false;
  ctx.check("factors are orthogonal", orth);
  ctx.check("factors are mutual commutants",
            commutant_subgroup(cf.c, cf.factor_t) == cf.factor_f &&
                commutant_subgroup(cf.c, cf.factor_f) == cf.factor_t);
  ctx.check("factor orders multiply to the center order",
            cf.factor_t.order() * cf.factor_f.order() == cf.c.order());
}

void run_mtc(Ctx& ctx) {
  MetricGroup m = metric_from(ctx.d);
  PointedMTC data = modular_data(m, ctx.opts.parallel);
  long long n = m.order();
  ctx.result["order"] = n;
  ctx.result["central_charge"] = data.central_charge;
  ctx.result["total_dim"] = data.d.str();
  if (n <= 16) {
    Json s = Json::array();
    for (long long i = 0; i < n; ++i) {
      Json row = Json::array();
      for (long long j = 0; j < n; ++j) row.push_back(data.s.at(i, j).str());
      s.push_back(row);
    }
    Json t = Json::array();
    for (long long i = 0; i < n; ++i) t.push_back(data.t.at(i, i).str());
    ctx.result["s"] = s;
    ctx.result["t_diag"] = t;
  }
  ctx.check("scalar reductions of the modular identities hold", true);
  if (ctx.opts.verify && n <= 16) {
    CMat conj(n, n);
    for (long long i = 0; i < n; ++i) {
      long long j = m.group().index_of(m.group().neg(m.group().element_at(i)));
      conj.at(j, i) = CycloValue::one();
    }
    ctx.check("S is unitary",
              cmat_mul(data.s, conj_transpose(data.s)) == cmat_identity(n));
    CMat s2 = cmat_mul(data.s, data.s);
    ctx.check("S^2 is charge conjugation", s2 == conj);
    CMat st = cmat_mul(data.s, data.t);
    CMat st3 = cmat_mul(cmat_mul(st, st), st);
    int c8 = ((data.central_charge % 8) + 8) % 8;
    ctx.check("(ST)^3 carries the framing anomaly",
              st3 == cmat_scaled(s2, CycloValue::root_of_unity(8, c8)));
  }
}

void validate_verlinde(const TomlDoc& d) {
  KeySet ks;
  metric_keys(ks);
  ks.insert("genus");
  no_unknown_keys(d, ks);
  validate_metric(d);
  if (get_int(need(d, "genus"), "genus") < 0) schema_fail("'genus' must be nonnegative");
}

void run_verlinde(Ctx& ctx) {
  MetricGroup m = metric_from(ctx.d);
  long genus = static_cast<long>(get_int(need(ctx.d, "genus"), "genus"));
  Int dim = verlinde_dim(m, genus);
  ctx.result["genus"] = genus;
  ctx.result["dimension"] = dim.get_str();
  if (ctx.opts.verify && genus <= 2 && m.order() <= 9) {
    HeisenbergSummary hs = heisenberg_summary(m, genus);
    ctx.check("Weyl-algebra irreducible dimension matches",
              hs.center_dim == 1 && int_of(hs.irrep_dim) == dim);
  }
}

void validate_rt3(const TomlDoc& d) {
  KeySet ks;
  metric_keys(ks);
  ks.insert("linking");
  no_unknown_keys(d, ks);
  validate_metric(d);
  const TomlValue& lv = need(d, "linking");
  ZMat b = get_int_matrix(lv, "linking");
  if (b.rows != b.cols) schema_fail_at("'linking' must be square", lv.line);
  if (!zmat_is_symmetric(b)) schema_fail_at("'linking' must be symmetric", lv.line);
}

void run_rt3(Ctx& ctx) {
  MetricGroup m = metric_from(ctx.d);
  ZMat b = get_int_matrix(need(ctx.d, "linking"), "linking");
  auto [pos, neg] = qmat_inertia_symmetric(qmat_from(b));
  CycloValue z = rt_invariant(m, SurgeryPresentation{b}, ctx.opts.parallel);
  ctx.result["components"] = b.rows;
  ctx.result["linking_signature"] = pos - neg;
  ctx.result["value"] = cyclo_json(z);
  if (ctx.opts.verify) {
    for (long blowup : {1L, -1L}) {
      ZMat one(1, 1);
      one.at(0, 0) = int_of(blowup);
      CycloValue stab =
          rt_invariant(m, SurgeryPresentation{zmat_direct_sum(b, one)}, ctx.opts.parallel);
      ctx.check(blowup > 0 ? "invariant under a +1 blow-up"
                           : "invariant under a -1 blow-up",
                stab == z);
    }
    ctx.check("parallel fold matches the serial fold",
              rt_invariant(m, SurgeryPresentation{b}, false) == z);
  }
}

void validate_anomaly4(const TomlDoc& d) {
  KeySet ks;
  metric_keys(ks);
  manifold_keys(ks);
  no_unknown_keys(d, ks);
  validate_metric(d);
  validate_manifold(d);
}

void run_anomaly4(Ctx& ctx) {
  FourManifold x = manifold_from(ctx.d);
  MetricGroup m = metric_from(ctx.d);
  ctx.result["manifold"] = Json{{"name", x.name()},
                                {"b1", x.b1()},
                                {"b2", x.b2()},
                                {"euler", x.euler()},
                                {"signature", x.signature()}};
  ctx.result["order"] = m.order();
  bool feasible =
      int_pow(int_of(m.order()), static_cast<unsigned long>(x.b2())) <= int_of(100000000);
  bool closed_ok = m.is_nondegenerate();
  CycloValue sum;
  if (feasible || !closed_ok) {
    sum = partition_sum(m, x, ctx.opts.parallel);
    ctx.result["exact"] = cyclo_json(sum);
  } else {
    ctx.result["exact"] = nullptr;
  }
  if (closed_ok) {
    EighthRootForm f = partition_closed(m, x);
    ctx.result["closed"] = Json{{"form", f.str()}, {"float", float_pair(f.to_complex())}};
    if (feasible)
      ctx.check("gerbe path integral equals the closed form", sum == f.expand());
  } else {
    ctx.result["closed"] = nullptr;
  }
}

void validate_dw_surface(const TomlDoc& d) {
  KeySet ks{"group", "genus", "cocycle"};
  no_unknown_keys(d, ks);
  const TomlValue& g = need(d, "group");
  std::string name = get_string(g, "group");
  if (!is_named_group(name)) schema_fail_at("unknown group '" + name + "'", g.line);
  if (get_int(need(d, "genus"), "genus") < 0) schema_fail("'genus' must be nonnegative");
  if (const TomlValue* c = d.find("cocycle")) {
    auto rows = get_phase_rows(*c, "cocycle");
    for (const auto& r : rows)
      if (r.size() != rows.size())
        schema_fail_at("'cocycle' must be a square table", c->line);
  }
}

void run_dw_surface(Ctx& ctx) {
  std::string name = need(ctx.d, "group").str;
  FiniteGroup g = named_group(name);
  long genus = static_cast<long>(get_int(need(ctx.d, "genus"), "genus"));
  const TomlValue* cv = ctx.d.find("cocycle");
  Cocycle2 c = cv ? Cocycle2::create(g, get_phase_rows(*cv, "cocycle")) : Cocycle2::zero(g);
  TwistedGroupAlgebra alg(c);
  CycloValue z = frobenius_partition(alg, genus);
  ctx.result["group"] = name;
  ctx.result["order"] = g.order();
  ctx.result["genus"] = genus;
  ctx.result["twisted"] = cv != nullptr;
  ctx.result["center_dim"] = algebra_center_dim(alg);
  ctx.result["value"] = cyclo_json(z);
  if (!cv) {
    Rat count = brute_force_surface(g, genus, ctx.opts.parallel);
    ctx.result["bundle_count"] = rat_str(count);
    ctx.check("Frobenius route matches the bundle count",
              z == CycloValue::from_rational(count));
  }
}

void validate_dw3(const TomlDoc& d) {
  KeySet ks{"group", "generators", "relators"};
  no_unknown_keys(d, ks);
  const TomlValue& g = need(d, "group");
  std::string name = get_string(g, "group");
  if (!is_named_group(name)) schema_fail_at("unknown group '" + name + "'", g.line);
  long long gens = get_int(need(d, "generators"), "generators");
  if (gens < 0 || gens > 26) schema_fail("'generators' must lie in 0..26");
  const TomlValue& rel = need(d, "relators");
  if (rel.kind != TomlValue::Kind::Array)
    schema_fail_at("'relators' must be an array of words", rel.line);
  for (const TomlValue& w : rel.array)
    parse_word(get_string(w, "relators"), static_cast<long>(gens), w.line);
}

void run_dw3(Ctx& ctx) {
  std::string name = need(ctx.d, "group").str;
  FiniteGroup g = named_group(name);
  GroupPresentation p;
  p.generators = static_cast<long>(get_int(need(ctx.d, "generators"), "generators"));
  Json words = Json::array();
  for (const TomlValue& w : need(ctx.d, "relators").array) {
    p.relators.push_back(parse_word(w.str, p.generators, w.line));
    words.push_back(w.str);
  }
  Rat v = dw3_invariant(p, g, ctx.opts.parallel);
  ctx.result["group"] = name;
  ctx.result["generators"] = p.generators;
  ctx.result["relators"] = words;
  ctx.result["value"] = rat_str(v);
  if (ctx.opts.verify)
    ctx.check("parallel fold matches the serial fold", dw3_invariant(p, g, false) == v);
}

void validate_dim1(const TomlDoc& d) {
  KeySet ks{"group", "lambda"};
  no_unknown_keys(d, ks);
  const TomlValue& g = need(d, "group");
  std::string name = get_string(g, "group");
  if (!is_named_group(name)) schema_fail_at("unknown group '" + name + "'", g.line);
  get_phase_array(need(d, "lambda"), "lambda");
}

void run_dim1(Ctx& ctx) {
  FiniteGroup g = named_group(need(ctx.d, "group").str);
  std::vector<PhaseQZ> lambda = get_phase_array(need(ctx.d, "lambda"), "lambda");
  Rat v = dim1_partition(g, lambda);
  ctx.result["group"] = need(ctx.d, "group").str;
  ctx.result["value"] = rat_str(v);
}

void validate_groupoid_card(const TomlDoc& d) {
  KeySet ks{"components"};
  no_unknown_keys(d, ks);
  const TomlValue& c = need(d, "components");
  if (c.kind != TomlValue::Kind::Array)
    schema_fail_at("'components' must be an array of towers", c.line);
  for (const TomlValue& t : c.array) get_int_array(t, "components");
}

void run_groupoid_card(Ctx& ctx) {
  PiTower t;
  for (const TomlValue& c : need(ctx.d, "components").array)
    t.components.push_back(get_int_array(c, "components"));
  Rat v = groupoid_cardinality(t);
  ctx.result["components"] = static_cast<long long>(t.components.size());
  ctx.result["value"] = rat_str(v);
}

Correspondence circle_correspondence(const FiniteGroup& g,
                                     const std::vector<CycloValue>& phi) {
  Correspondence corr;
  corr.mid = bun_groupoid("circle", g);
  long n = g.order();
  corr.px.assign(static_cast<std::size_t>(n), 0);
  corr.py.assign(static_cast<std::size_t>(n), 0);
  corr.hx.assign(static_cast<std::size_t>(n), 0);
  corr.hy.assign(static_cast<std::size_t>(n), 0);
  for (long c = 0; c < n; ++c) {
    CMat m(1, 1);
    m.at(0, 0) = phi[static_cast<std::size_t>(c)];
    corr.phi.push_back(m);
  }
  return corr;
}

void run_sum1(Ctx& ctx) {
  std::string name = need(ctx.d, "group").str;
  FiniteGroup g = named_group(name);
  std::vector<PhaseQZ> lambda = get_phase_array(need(ctx.d, "lambda"), "lambda");
  Rat direct = dim1_partition(g, lambda);
  std::vector<CycloValue> phi;
  for (const PhaseQZ& p : lambda) phi.push_back(CycloValue::root_of_unity(p));
  CMat z = sum1_push(unit_system(), unit_system(), circle_correspondence(g, phi));
  ctx.result["group"] = name;
  ctx.result["push"] = cyclo_json(z.at(0, 0));
  ctx.result["direct"] = rat_str(direct);
  ctx.check("circle closing matches the 1D partition sum",
            z.at(0, 0) == CycloValue::from_rational(direct));
}

// ---- registry ---------------------------------------------------------

struct Command {
  void (*validate)(const TomlDoc&);
  void (*run)(Ctx&);
};

const std::map<std::string, Command>& registry() {
  static const std::map<std::string, Command> table = {
      {"lattice-info", {validate_lattice_info, run_lattice_info}},
      {"gauss", {validate_gauss, run_gauss}},
      {"milgram", {validate_gauss, run_milgram}},
      {"tower", {validate_tower, run_tower}},
      {"center-check", {validate_tower, run_center_check}},
      {"mtc", {validate_gauss, run_mtc}},
      {"verlinde", {validate_verlinde, run_verlinde}},
      {"rt3", {validate_rt3, run_rt3}},
      {"anomaly4", {validate_anomaly4, run_anomaly4}},
      {"dw-surface", {validate_dw_surface, run_dw_surface}},
      {"dw3", {validate_dw3, run_dw3}},
      {"dim1", {validate_dim1, run_dim1}},
      {"groupoid-card", {validate_groupoid_card, run_groupoid_card}},
      {"sum1", {validate_dim1, run_sum1}},
  };
  return table;
}

}  // namespace

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

JobSpec parse_job(const std::string& text) {
  JobSpec job;
  job.payload = parse_toml(text);
  job.input_hash = fnv1a64_hex(text);
  const TomlValue* cmd = job.payload.find("command");
  if (!cmd) schema_fail("missing 'command'");
  job.command = get_string(*cmd, "command");
  auto it = registry().find(job.command);
  if (it == registry().end()) schema_fail("unknown command '" + job.command + "'");
  it->second.validate(job.payload);
  return job;
}

std::string run_job(const JobSpec& job, const JobOptions& opts) {
  auto it = registry().find(job.command);
  require(it != registry().end(), "SchemaError", "unknown command '" + job.command + "'");
  Ctx ctx{job.payload, opts};
  it->second.run(ctx);
  Json out;
  out["command"] = job.command;
  out["version"] = kVersion;
  out["input_hash"] = job.input_hash;
  out["result"] = std::move(ctx.result);
  out["checks"] = std::move(ctx.checks);
  return opts.json_indent >= 0 ? out.dump(opts.json_indent) : out.dump();
}

}  // namespace tqftkit
