#include "betti/pure.hpp"

#include <cstdlib>
#include <string>

namespace betti {

namespace {

// Product of |d_i - d_k| over finite positions k != i.
Int entry_denominator(const DegreeSequence& d, int i) {
  Int prod = 1;
  for (int k = 0; k <= d.n(); ++k) {
    if (k == i || !d.finite(k)) continue;
    prod *= std::abs(d.degree(i) - d.degree(k));
  }
  return prod;
}

}  // namespace

BettiDiagram pure_diagram(const DegreeSequence& d) {
  if (!d.finite(0))
    throw ValidationError("pure diagram needs a finite leading degree: " + d.str());
  BettiDiagram out(d.n());
  for (int i = 0; i <= d.n(); ++i) {
    if (!d.finite(i)) break;
    out.set(i, d.degree(i), Rational(Int(1), entry_denominator(d, i)));
  }
  return out;
}

Int pure_denominator_lcm(const DegreeSequence& d) {
  if (!d.finite(0))
    throw ValidationError("pure diagram needs a finite leading degree: " + d.str());
  Int m = 1;
  for (int i = 0; i <= d.n(); ++i) {
    if (!d.finite(i)) break;
    m = lcm(m, entry_denominator(d, i));
  }
  return m;
}

BettiDiagram smallest_integral_point(const DegreeSequence& d) {
  return scale(pure_diagram(d), Rational(pure_denominator_lcm(d)));
}

DegreeSequence top_strand(const BettiDiagram& d) {
  if (d.zero()) throw ValidationError("top strand of the zero diagram");
  std::vector<ExtendedDegree> mins(d.n() + 1);
  for (int i = 0; i <= d.n(); ++i) mins[i] = min_degree(d, i);
  bool gap = false;
  for (int i = 0; i <= d.n(); ++i) {
    if (mins[i] && gap)
      throw NotInConeError("column " + std::to_string(i) +
                           " is nonzero after an empty column");
    if (!mins[i]) gap = true;
  }
  for (int i = 1; i <= d.n(); ++i) {
    if (mins[i] && *mins[i] <= *mins[i - 1])
      throw NotInConeError("column minima fail to increase at column " +
                           std::to_string(i));
  }
  return DegreeSequence(std::move(mins));
}

}  // namespace betti
