#include "betti/hilbert.hpp"

#include <vector>

namespace betti {

Rational HilbertNumerator::coefficient(int degree) const {
  const auto it = coefficients_.find(degree);
  return it == coefficients_.end() ? Rational() : it->second;
}

void HilbertNumerator::add_term(int degree, const Rational& c) {
  const Rational v = coefficient(degree) + c;
  if (v.is_zero())
    coefficients_.erase(degree);
  else
    coefficients_[degree] = v;
}

std::string HilbertNumerator::str() const {
  if (coefficients_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [deg, c] : coefficients_) {
    if (!first) s += c.sign() < 0 ? " - " : " + ";
    if (first && c.sign() < 0) s += "-";
    first = false;
    const Rational a = c.sign() < 0 ? -c : c;
    const bool unit = a == Rational(1);
    if (deg == 0) {
      s += a.str();
    } else {
      if (!unit) s += a.str() + "*";
      s += "t";
      if (deg != 1) s += "^" + std::to_string(deg);
    }
  }
  return s;
}

HilbertNumerator hilbert_numerator(const BettiDiagram& d) {
  HilbertNumerator k;
  for (const auto& [pos, v] : d.entries())
    k.add_term(pos.second, pos.first % 2 == 0 ? v : -v);
  return k;
}

bool divisible_by_one_minus_t(const HilbertNumerator& k, int power) {
  if (power < 0) throw ValidationError("negative divisibility power");
  if (k.zero()) return true;
  const int lo = k.coefficients().begin()->first;
  const int hi = k.coefficients().rbegin()->first;
  std::vector<Rational> a(hi - lo + 1);
  for (const auto& [deg, c] : k.coefficients()) a[deg - lo] = c;
  // Dividing by (1 - t) turns the coefficient list into its prefix sums; the
  // division is exact iff the total sum vanishes.
  for (int rep = 0; rep < power; ++rep) {
    Rational run;
    for (auto& c : a) {
      run += c;
      c = run;
    }
    if (!a.back().is_zero()) return false;
    a.pop_back();
    if (a.empty()) return true;
  }
  return true;
}

bool is_finite_length_consistent(const BettiDiagram& d, int n) {
  if (n < 0) throw ValidationError("negative number of variables");
  return divisible_by_one_minus_t(hilbert_numerator(d), n);
}

}  // namespace betti
