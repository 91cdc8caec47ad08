#include "tqftkit/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tqftkit/error.hpp"
#include "tqftkit/ratmat.hpp"

namespace tqftkit {

long euler_phi(long n) {
  require(n >= 1, "ShapeMismatch", "euler_phi of non-positive argument");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::pair<long, long> squarefree_split(long n) {
  require(n >= 1, "ShapeMismatch", "squarefree_split of non-positive argument");
  long m = 1, s = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) m *= p;
  }
  m *= n;  // leftover prime, if any
  return {m, s};
}

namespace {

// Exact division of integer polynomials, divisor monic. Low degree first.
std::vector<Int> poly_divexact(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> rem = num;
  long dn = static_cast<long>(num.size()) - 1;
  long dd = static_cast<long>(den.size()) - 1;
  require(den[static_cast<std::size_t>(dd)] == 1, "ShapeMismatch", "divisor not monic");
  std::vector<Int> quot(static_cast<std::size_t>(dn - dd + 1), Int(0));
  for (long d = dn; d >= dd; --d) {
    Int c = rem[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(d - dd)] = c;
    for (long i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(d - dd + i)] -= c * den[static_cast<std::size_t>(i)];
  }
  for (const Int& r : rem) require(r == 0, "ShapeMismatch", "inexact polynomial division");
  return quot;
}

std::recursive_mutex g_phi_mutex;
std::map<long, std::vector<Int>> g_phi_cache;

const std::vector<Int>& cyclotomic_poly_locked(long n) {
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;
  std::vector<Int> poly;
  if (n == 1) {
    poly = {Int(-1), Int(1)};
  } else {
    std::vector<Int> acc(static_cast<std::size_t>(n) + 1, Int(0));
    acc[0] = -1;
    acc[static_cast<std::size_t>(n)] = 1;  // x^n - 1
    for (long d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      acc = poly_divexact(acc, cyclotomic_poly_locked(d));
    }
    poly = std::move(acc);
  }
  auto [pos, inserted] = g_phi_cache.emplace(n, std::move(poly));
  (void)inserted;
  return pos->second;
}

// In place: folds exponents mod x^order - 1, then reduces mod Phi_order.
// Result is resized to phi(order).
void reduce_raw(std::vector<Rat>& raw, long order) {
  if (static_cast<long>(raw.size()) > order) {
    for (long k = static_cast<long>(raw.size()) - 1; k >= order; --k) {
      raw[static_cast<std::size_t>(k % order)] += raw[static_cast<std::size_t>(k)];
      raw[static_cast<std::size_t>(k)] = 0;
    }
    raw.resize(static_cast<std::size_t>(order));
  } else {
    raw.resize(static_cast<std::size_t>(order), Rat(0));
  }
  const std::vector<Int>& phi = cyclotomic_poly(order);
  const long deg = static_cast<long>(phi.size()) - 1;
  for (long d = static_cast<long>(raw.size()) - 1; d >= deg; --d) {
    Rat c = raw[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    for (long i = 0; i <= deg; ++i)
      raw[static_cast<std::size_t>(d - deg + i)] -= c * Rat(phi[static_cast<std::size_t>(i)]);
  }
  raw.resize(static_cast<std::size_t>(deg));
  for (Rat& r : raw) r.canonicalize();
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

const std::vector<Int>& cyclotomic_poly(long n) {
  require(n >= 1, "ShapeMismatch", "cyclotomic polynomial of non-positive order");
  std::lock_guard<std::recursive_mutex> lock(g_phi_mutex);
  return cyclotomic_poly_locked(n);
}

CycloValue CycloValue::zero(long order) {
  return CycloValue(order, std::vector<Rat>(static_cast<std::size_t>(euler_phi(order)), Rat(0)));
}

CycloValue CycloValue::one() { return from_rational(Rat(1)); }

CycloValue CycloValue::from_rational(const Rat& r) {
  return CycloValue(1, std::vector<Rat>{r});
}

CycloValue CycloValue::root_of_unity(long order, long k) {
  require(order >= 1, "ShapeMismatch", "root of unity of non-positive order");
  k %= order;
  if (k < 0) k += order;
  std::vector<Rat> raw(static_cast<std::size_t>(order), Rat(0));
  raw[static_cast<std::size_t>(k)] = 1;
  return from_raw(order, std::move(raw));
}

CycloValue CycloValue::root_of_unity(const PhaseQZ& a) {
  return root_of_unity(to_ll(a.den()), to_ll(a.num()));
}

CycloValue CycloValue::from_raw(long order, std::vector<Rat> raw) {
  reduce_raw(raw, order);
  return CycloValue(order, std::move(raw));
}

bool CycloValue::is_zero() const {
  for (const Rat& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloValue::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat CycloValue::rational_value() const {
  require(is_rational(), "NotRational", "cyclotomic value is irrational: " + str());
  return coeffs_.empty() ? Rat(0) : coeffs_[0];
}

std::vector<Rat> CycloValue::raw_at_order(long target) const {
  require(target % order_ == 0, "ShapeMismatch", "order embedding must be into a multiple");
  const long stride = target / order_;
  std::vector<Rat> raw(static_cast<std::size_t>(target), Rat(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    raw[k * static_cast<std::size_t>(stride)] = coeffs_[k];
  return raw;
}

CycloValue CycloValue::operator+(const CycloValue& o) const {
  const long m = lcm_long(order_, o.order_);
  std::vector<Rat> raw = raw_at_order(m);
  std::vector<Rat> other = o.raw_at_order(m);
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] += other[i];
  return from_raw(m, std::move(raw));
}

CycloValue CycloValue::operator-(const CycloValue& o) const { return *this + (-o); }

CycloValue CycloValue::operator-() const {
  std::vector<Rat> c = coeffs_;
  for (Rat& x : c) x = -x;
  return CycloValue(order_, std::move(c));
}

CycloValue CycloValue::operator*(const CycloValue& o) const {
  const long m = lcm_long(order_, o.order_);
  const long s1 = m / order_, s2 = m / o.order_;
  std::vector<Rat> raw(static_cast<std::size_t>(m), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      const long e = static_cast<long>((i * static_cast<std::size_t>(s1) +
                                        j * static_cast<std::size_t>(s2)) %
                                       static_cast<std::size_t>(m));
      raw[static_cast<std::size_t>(e)] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return from_raw(m, std::move(raw));
}

CycloValue CycloValue::scaled(const Rat& r) const {
  std::vector<Rat> c = coeffs_;
  for (Rat& x : c) {
    x *= r;
    x.canonicalize();
  }
  return CycloValue(order_, std::move(c));
}

CycloValue CycloValue::conjugate() const {
  std::vector<Rat> raw(static_cast<std::size_t>(order_), Rat(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const long e = (order_ - static_cast<long>(k)) % order_;
    raw[static_cast<std::size_t>(e)] += coeffs_[k];
  }
  return from_raw(order_, std::move(raw));
}

CycloValue CycloValue::pow(unsigned long e) const {
  CycloValue acc = one();
  CycloValue base = *this;
  while (e > 0) {
    if (e & 1ul) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycloValue CycloValue::inverse() const {
  require(!is_zero(), "DivisionByZero", "inverse of zero cyclotomic value");
  const long phi = static_cast<long>(coeffs_.size());
  // Columns of the multiplication-by-*this* operator in the power basis.
  QMat mult(phi, phi);
  for (long j = 0; j < phi; ++j) {
    std::vector<Rat> raw(static_cast<std::size_t>(order_) + coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      raw[k + static_cast<std::size_t>(j)] = coeffs_[k];
    reduce_raw(raw, order_);
    for (long i = 0; i < phi; ++i) mult.at(i, j) = raw[static_cast<std::size_t>(i)];
  }
  std::vector<Rat> e0(static_cast<std::size_t>(phi), Rat(0));
  e0[0] = 1;
  std::vector<Rat> sol = qmat_solve(mult, e0);
  return CycloValue(order_, std::move(sol));
}

bool CycloValue::operator==(const CycloValue& o) const {
  if (order_ == o.order_) return coeffs_ == o.coeffs_;
  const long m = lcm_long(order_, o.order_);
  std::vector<Rat> r1 = raw_at_order(m);
  std::vector<Rat> r2 = o.raw_at_order(m);
  reduce_raw(r1, m);
  reduce_raw(r2, m);
  return r1 == r2;
}

std::complex<double> CycloValue::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  const double tau = 2.0 * 3.14159265358979323846;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double ang = tau * static_cast<double>(k) / static_cast<double>(order_);
    acc += to_double(coeffs_[k]) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string CycloValue::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    os << rat_str(coeffs_[k]);
    if (k > 0) os << "*z" << order_ << "^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycloValue sqrt_of_integer(long n) {
  require(n >= 1, "ShapeMismatch", "sqrt of non-positive integer");
  auto [m, s] = squarefree_split(n);
  CycloValue acc = CycloValue::from_rational(Rat(s));
  long rest = m;
  for (long p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    rest /= p;
    if (p == 2) {
      // sqrt(2) = z8 + z8^-1
      std::vector<Rat> raw(8, Rat(0));
      raw[1] = 1;
      raw[7] = 1;
      acc = acc * CycloValue::from_raw(8, std::move(raw));
      continue;
    }
    // Quadratic Gauss sum g_p = sum_k zeta_p^(k^2); equals sqrt(p) for
    // p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4.
    std::vector<Rat> raw(static_cast<std::size_t>(p), Rat(0));
    for (long k = 0; k < p; ++k) raw[static_cast<std::size_t>((k * k) % p)] += 1;
    CycloValue g = CycloValue::from_raw(p, std::move(raw));
    if (p % 4 == 3) g = g * CycloValue::root_of_unity(4, 3);
    acc = acc * g;
  }
  return acc;
}

void PhaseHistogram::merge(const PhaseHistogram& o) {
  require(modulus == o.modulus, "ShapeMismatch", "histogram modulus mismatch");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
}

CycloValue PhaseHistogram::to_cyclo() const {
  std::vector<Rat> raw(static_cast<std::size_t>(modulus), Rat(0));
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] != 0) raw[k] = Rat(static_cast<long>(counts[k]));
  return CycloValue::from_raw(modulus, std::move(raw));
}

}  // namespace tqftkit
