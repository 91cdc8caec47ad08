#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tqftkit/phase.hpp"
#include "tqftkit/rational.hpp"

namespace tqftkit {

long euler_phi(long n);

// Coefficients of the n-th cyclotomic polynomial, low degree first, monic,
// length euler_phi(n) + 1. Cached; the returned reference stays valid.
const std::vector<Int>& cyclotomic_poly(long n);

// Squarefree part m and cofactor s with n = s^2 * m (n >= 1).
std::pair<long, long> squarefree_split(long n);

// An element of the cyclotomic field Q(zeta_N), zeta_N = e(1/N), stored as
// the unique representative of degree < phi(N) modulo the N-th cyclotomic
// polynomial. Equality across different orders embeds into the lcm order.
class CycloValue {
public:
  CycloValue() : order_(1), coeffs_(1, Rat(0)) {}

  static CycloValue zero(long order = 1);
  static CycloValue one();
  static CycloValue from_rational(const Rat& r);
  // e(k/n) as an exact root of unity.
  static CycloValue root_of_unity(long order, long k);
  static CycloValue root_of_unity(const PhaseQZ& a);
  // Builds sum_k raw[k] * zeta_order^k and reduces to canonical form.
  static CycloValue from_raw(long order, std::vector<Rat> raw);

  long order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws NotRational when is_rational() fails

  CycloValue operator+(const CycloValue& o) const;
  CycloValue operator-(const CycloValue& o) const;
  CycloValue operator-() const;
  CycloValue operator*(const CycloValue& o) const;
  CycloValue scaled(const Rat& r) const;
  CycloValue conjugate() const;
  CycloValue pow(unsigned long e) const;
  CycloValue inverse() const;  // throws DivisionByZero on zero

  bool operator==(const CycloValue& o) const;
  bool operator!=(const CycloValue& o) const { return !(*this == o); }

  // |x|^2 = x * conj(x), exact.
  CycloValue norm_squared() const { return *this * conjugate(); }

  std::complex<double> to_complex() const;
  std::string str() const;

private:
  CycloValue(long order, std::vector<Rat> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}

  // Canonical coefficients re-expressed at a multiple of order_.
  std::vector<Rat> raw_at_order(long target) const;

  long order_;
  std::vector<Rat> coeffs_;
};

// Exact sqrt(n) for integer n >= 1, expressed via quadratic Gauss sums.
// The result has integer coefficients in its raw expansion.
CycloValue sqrt_of_integer(long n);

// Integer-count accumulator for sums of roots of unity of a fixed order.
// This is the exchange format between the fold kernels and exact values.
struct PhaseHistogram {
  long modulus = 1;
  std::vector<long long> counts;

  explicit PhaseHistogram(long m) : modulus(m), counts(static_cast<std::size_t>(m), 0) {}
  void add(long k, long long c = 1) { counts[static_cast<std::size_t>(k)] += c; }
  void merge(const PhaseHistogram& o);
  CycloValue to_cyclo() const;
};

}  // namespace tqftkit
