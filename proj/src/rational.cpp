#include "tqftkit/rational.hpp"

#include <cctype>

#include "tqftkit/error.hpp"

namespace tqftkit {

namespace {

bool looks_like_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  auto digits = [&](std::size_t& pos) {
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos > start;
  };
  if (!digits(i)) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  if (!digits(i)) return false;
  return i == s.size();
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  require(looks_like_rational(s), "ParseError", "not a rational: '" + s + "'");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    fail("ParseError", "not a rational: '" + s + "'");
  require(sgn(r.get_den()) != 0, "ParseError", "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Rat rat_from_string_strict(const std::string& s) {
  Rat r = rat_from_string(s);
  require(rat_str(r) == s, "ParseError",
          "rational '" + s + "' is not in lowest terms with positive denominator");
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string int_str(const Int& z) { return z.get_str(); }

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Rat rat_mod1(const Rat& r) {
  Rat out = r - Rat(rat_floor(r));
  out.canonicalize();
  return out;
}

long long to_ll(const Int& z) {
  require(z.fits_slong_p(), "TooLarge", "integer " + z.get_str() + " exceeds machine range");
  return static_cast<long long>(z.get_si());
}

double to_double(const Rat& r) { return r.get_d(); }

Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

long long lcm_ll(long long a, long long b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), Int(static_cast<long>(a)).get_mpz_t(),
          Int(static_cast<long>(b)).get_mpz_t());
  return to_ll(l);
}

}  // namespace tqftkit
