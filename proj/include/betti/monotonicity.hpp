#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "betti/degree_sequence.hpp"
#include "betti/parallel.hpp"
#include "betti/rational.hpp"

namespace betti {

// beta_i / beta_{i+1} of a pure diagram; infinite when the i+1 position
// vanishes (d_{i+1} infinite). Kept symbolic so comparisons stay exact.
struct StrandRatio {
  bool infinite = false;
  Rational value;

  friend bool operator==(const StrandRatio& a, const StrandRatio& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

bool ratio_less(const StrandRatio& a, const StrandRatio& b);

StrandRatio strand_ratio(const DegreeSequence& d, int i);

// For d < e with positions i and i+1 pinned (d_i = e_i, d_{i+1} = e_{i+1}),
// reports whether the strand ratio strictly grows from d to e. A false return
// is a counterexample to the monotonicity principle, not an error.
bool check_monotonicity(const DegreeSequence& d, const DegreeSequence& e, int i);

struct SweepReport {
  int max_degree = 0;
  int n = 0;
  int i = 0;
  long long pairs_checked = 0;
  std::optional<std::pair<DegreeSequence, DegreeSequence>> counterexample;

  bool all_passed() const { return !counterexample.has_value(); }
};

// Exhaustively checks the strict ratio inequality over every pair of valid
// sequences with entries in [0, max_degree] ∪ {∞} satisfying the pinning
// hypotheses with d_i and d_{i+1} finite (so both ratios are defined).
SweepReport sweep_verify(int max_degree, int n, int i,
                         ExecutionPolicy policy = ExecutionPolicy::parallel);

}  // namespace betti
