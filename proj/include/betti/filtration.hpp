#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "betti/decompose.hpp"
#include "betti/degree_sequence.hpp"
#include "betti/diagram.hpp"

namespace betti {

// d << e: d < e termwise and d_2 <= e_1 (infinity greatest). Under this
// separation the leading step of a decomposition is forced to be the diagram
// of a cleanly embedded submodule, so its entries must be integers.
bool is_strictly_separated(const DegreeSequence& d, const DegreeSequence& e);

// d_n - n < e_1: strong enough separation to force a direct summand.
bool splits_strongly(const DegreeSequence& d, const DegreeSequence& e, int n);

struct PairFlags {
  bool separated = false;
  bool strong_split = false;
};

enum class Verdict {
  direct_sum_certified,
  clean_filtration_certified,
  obstruction_found,
  inconclusive,
};

std::string_view verdict_name(Verdict v);

struct FiltrationReport {
  DecompositionChain chain;            // pi~ units
  std::vector<PairFlags> pair_flags;   // one per consecutive pair of steps
  std::vector<bool> step_integral;     // one per step, for c_t * pi_{d^t}
  bool first_step_integral = true;
  Verdict verdict = Verdict::inconclusive;
  std::optional<BettiDiagram> witness;  // the non-integral step diagram
  int obstruction_step = -1;
};

struct AnalyzeOptions {
  // Skips the finite-length and n >= 2 hypothesis checks (exploratory use;
  // the certificates are only meaningful when the hypotheses hold).
  bool override_hypotheses = false;
};

// Decomposes the diagram and certifies what the separation pattern allows:
// every pair separated and strongly split with integral steps certifies a
// direct sum; every pair separated with integral steps certifies a clean
// filtration; a separated prefix of integral steps followed by a separated
// non-integral step is an obstruction (no finite-length module has this
// diagram).
FiltrationReport analyze(const BettiDiagram& d, int n, const AnalyzeOptions& options = {});

// Smallest positive integer c such that every obstruction-checked step of
// analyze(c * D) is integral; 1 when the diagram certifies as is. Throws
// InconclusiveError when no obstruction is derivable.
Int minimal_integral_multiple(const BettiDiagram& d, int n, const AnalyzeOptions& options = {});

// Degree cutoffs of the maximal numerical subcomplex through the minimal
// degree first syzygies: f_0 = 1 + max generator degree, f_1 = 1 + min first
// syzygy degree, and f_i = min{j > f_{i-1} : beta_{i,j} != 0} afterwards.
using CutoffVector = std::vector<ExtendedDegree>;
CutoffVector north_fork_degrees(const BettiDiagram& d);

// Keeps exactly the entries with j < f_i in column i.
BettiDiagram truncate(const BettiDiagram& d, const CutoffVector& f);

// Betti diagram of the cokernel of the cutoff presentation: the leading
// decomposition step(s) plus a free column-0 remainder. With
// extended_hypotheses, all leading steps sharing the minimal first-syzygy
// degree are retained, provided the last of them is separated from the rest.
BettiDiagram predict_quotient_betti(const BettiDiagram& d, int n,
                                    bool extended_hypotheses = false,
                                    const AnalyzeOptions& options = {});

// Whether a diagram splitting D = core + free certifies an actual module
// splitting: core must have codimension >= 2 (Hilbert numerator divisible by
// (1-t)^2) and the free part's generators must not precede the core's.
bool check_free_split(const BettiDiagram& core, const BettiDiagram& free_part, int n);

}  // namespace betti
