#pragma once

#include <map>

#include "betti/diagram.hpp"

namespace betti {

// Numerator of the Hilbert series determined by a diagram: the alternating
// column sum K(t) = sum_{i,j} (-1)^i beta_{i,j} t^j.
class HilbertNumerator {
 public:
  HilbertNumerator() = default;

  bool zero() const { return coefficients_.empty(); }
  Rational coefficient(int degree) const;
  const std::map<int, Rational>& coefficients() const { return coefficients_; }
  void add_term(int degree, const Rational& c);

  std::string str() const;

  friend bool operator==(const HilbertNumerator& a, const HilbertNumerator& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  std::map<int, Rational> coefficients_;
};

HilbertNumerator hilbert_numerator(const BettiDiagram& d);

// Exact divisibility by (1 - t)^power.
bool divisible_by_one_minus_t(const HilbertNumerator& k, int power);

// A finite-length module over n variables has Hilbert numerator divisible by
// (1 - t)^n; this tests that condition at the diagram level.
bool is_finite_length_consistent(const BettiDiagram& d, int n);

}  // namespace betti
