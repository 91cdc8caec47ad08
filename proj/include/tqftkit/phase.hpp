#pragma once

#include <string>

#include "tqftkit/rational.hpp"

namespace tqftkit {

// An element of Q/Z, stored as its unique representative in [0, 1).
// e(a) denotes exp(2*pi*i*a); PhaseQZ is the exponent, never the complex value.
class PhaseQZ {
public:
  PhaseQZ() : value_(0) {}
  explicit PhaseQZ(const Rat& r) : value_(rat_mod1(r)) {}

  static PhaseQZ of(long num, long den) { return PhaseQZ(rat(num, den)); }

  const Rat& value() const { return value_; }
  Int num() const { return value_.get_num(); }
  Int den() const { return value_.get_den(); }

  bool is_zero() const { return value_ == 0; }

  PhaseQZ operator+(const PhaseQZ& o) const { return PhaseQZ(value_ + o.value_); }
  PhaseQZ operator-(const PhaseQZ& o) const { return PhaseQZ(value_ - o.value_); }
  PhaseQZ operator-() const { return PhaseQZ(-value_); }
  PhaseQZ times(const Int& k) const { return PhaseQZ(Rat(k) * value_); }

  bool operator==(const PhaseQZ& o) const { return value_ == o.value_; }
  bool operator!=(const PhaseQZ& o) const { return !(*this == o); }

  double turns() const { return to_double(value_); }
  std::string str() const { return rat_str(value_); }

private:
  Rat value_;
};

}  // namespace tqftkit
