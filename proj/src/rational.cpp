#include "betti/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "betti/errors.hpp"

namespace betti {

namespace {

// Strict integer token: optional '-', then one or more digits. GMP's own
// parser skips interior whitespace, which is too lenient for our formats.
bool valid_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw ValidationError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw ParseError("bad rational token '" + std::string(text) + "'");
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_token(text)) return fail();
    return Rational(Int(std::string(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den)) return fail();
  Int d((std::string(den)));
  if (sgn(d) <= 0) return fail();
  return Rational(Int(std::string(num)), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace betti
