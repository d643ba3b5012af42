#pragma once

#include <string>
#include <vector>

#include "betti/degree_sequence.hpp"
#include "betti/diagram.hpp"

namespace betti {

// Coefficient convention for decomposition chains: relative to the rational
// pure diagram pi_d, or to its smallest integral point pi~_d.
enum class Units { pi, pi_tilde };

std::string units_name(Units u);

struct DecompositionStep {
  Rational coefficient;
  DegreeSequence sequence;

  friend bool operator==(const DecompositionStep& a, const DecompositionStep& b) {
    return a.coefficient == b.coefficient && a.sequence == b.sequence;
  }
};

// An ordered chain of (coefficient, degree sequence) pairs whose weighted sum
// of pure diagrams reconstructs the decomposed diagram exactly. Sequences
// increase strictly termwise along the chain.
class DecompositionChain {
 public:
  DecompositionChain(std::vector<DecompositionStep> steps, Units units)
      : steps_(std::move(steps)), units_(units) {}

  const std::vector<DecompositionStep>& steps() const { return steps_; }
  Units units() const { return units_; }
  bool empty() const { return steps_.empty(); }
  std::size_t size() const { return steps_.size(); }

  DecompositionChain in_units(Units target) const;
  BettiDiagram reconstruct(int n) const;

  // One step per line: "c * pi~(d_0,...,d_n)" (or "pi(...)" in raw units).
  std::string str() const;

  friend bool operator==(const DecompositionChain& a, const DecompositionChain& b) {
    return a.units_ == b.units_ && a.steps_ == b.steps_;
  }

 private:
  std::vector<DecompositionStep> steps_;
  Units units_;
};

// Greedy decomposition on the top strand. Each step subtracts the largest
// multiple of the current top strand's pure diagram that keeps all entries
// non-negative; a diagram lies in the cone exactly when the remainder reaches
// zero. Throws NotInConeError (with the partial remainder) otherwise.
DecompositionChain bs_decompose(const BettiDiagram& d, Units units = Units::pi_tilde);

bool is_in_cone(const BettiDiagram& d);

}  // namespace betti
