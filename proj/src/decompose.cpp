#include "betti/decompose.hpp"

#include "betti/pure.hpp"

namespace betti {

std::string units_name(Units u) {
  return u == Units::pi_tilde ? "pitilde" : "pi";
}

DecompositionChain DecompositionChain::in_units(Units target) const {
  if (target == units_) return *this;
  std::vector<DecompositionStep> out;
  out.reserve(steps_.size());
  for (const auto& step : steps_) {
    const Rational m(pure_denominator_lcm(step.sequence));
    // c_raw * pi = c~ * pi~ with pi~ = m * pi.
    const Rational c = target == Units::pi_tilde ? step.coefficient / m
                                                 : step.coefficient * m;
    out.push_back({c, step.sequence});
  }
  return DecompositionChain(std::move(out), target);
}

BettiDiagram DecompositionChain::reconstruct(int n) const {
  BettiDiagram out(n);
  for (const auto& step : steps_) {
    const BettiDiagram base = units_ == Units::pi_tilde
                                  ? smallest_integral_point(step.sequence)
                                  : pure_diagram(step.sequence);
    out = add(out, scale(base, step.coefficient));
  }
  return out;
}

std::string DecompositionChain::str() const {
  const std::string tag = units_ == Units::pi_tilde ? "pi~" : "pi";
  std::string s;
  for (const auto& step : steps_)
    s += step.coefficient.str() + " * " + tag + step.sequence.str() + "\n";
  return s;
}

DecompositionChain bs_decompose(const BettiDiagram& d, Units units) {
  for (const auto& [pos, v] : d.entries())
    if (v.sign() < 0)
      throw NotInConeError("negative entry at (" + std::to_string(pos.first) +
                               "," + std::to_string(pos.second) + ")",
                           d);

  BettiDiagram remainder = d;
  std::vector<DecompositionStep> steps;
  std::optional<DegreeSequence> previous;
  // Every greedy step clears at least one stored entry and never creates one,
  // so the entry count of the input bounds the number of iterations.
  const std::size_t bound = d.entries().size();

  while (!remainder.zero()) {
    if (steps.size() >= bound)
      throw NotInConeError("greedy loop exceeded its iteration bound", remainder);

    DegreeSequence strand = [&] {
      try {
        return top_strand(remainder);
      } catch (const NotInConeError& e) {
        throw NotInConeError(e.what(), remainder);
      }
    }();
    if (previous && !termwise_less(*previous, strand))
      throw NotInConeError("top strands fail to increase along the chain", remainder);

    const BettiDiagram pure = pure_diagram(strand);
    std::optional<Rational> coeff;
    for (int i = 0; i <= strand.n(); ++i) {
      if (!strand.finite(i)) break;
      const int j = strand.degree(i);
      const Rational ratio = remainder.at(i, j) / pure.at(i, j);
      if (!coeff || ratio < *coeff) coeff = ratio;
    }

    const std::size_t before = remainder.entries().size();
    try {
      remainder = subtract_nonneg(remainder, scale(pure, *coeff));
    } catch (const NonNegativityViolation& e) {
      throw NotInConeError(e.what(), remainder);
    }
    if (remainder.entries().size() >= before)
      throw NotInConeError("greedy step failed to clear a top-strand entry",
                           remainder);

    steps.push_back({*coeff, strand});
    previous = std::move(strand);
  }

  return DecompositionChain(std::move(steps), Units::pi).in_units(units);
}

bool is_in_cone(const BettiDiagram& d) {
  try {
    bs_decompose(d);
    return true;
  } catch (const NotInConeError&) {
    return false;
  }
}

}  // namespace betti
