#pragma once

#include <optional>
#include <vector>

#include "betti/decompose.hpp"
#include "betti/degree_sequence.hpp"
#include "betti/diagram.hpp"
#include "betti/parallel.hpp"

namespace betti {

bool is_prime(unsigned long p);

// A candidate combination that failed a certificate check, kept so the
// failure can be reported instead of silently replaced.
struct RejectedCandidate {
  std::vector<DegreeSequence> sequences;
  std::vector<Rational> weights;  // pi~ units
  BettiDiagram diagram{3};
  Position failing_position{0, 0};
  Rational failing_value;
};

// An integral diagram D whose multiples c*D carry an integrality obstruction
// unless p divides c. Weights are in pi~ units with denominator p; the
// checks run on construction and a failed check raises ConstructionError.
struct SparseRayCertificate {
  unsigned long p = 0;
  unsigned long alpha = 0;  // numerator of the second weight
  std::vector<DegreeSequence> sequences;
  std::vector<Rational> weights;  // pi~ units
  BettiDiagram diagram{3};
  Int obstruction_multiple;
  std::optional<RejectedCandidate> rejected;
};

// Builds the certified ray for a prime p. For p >= 5 the construction is
// (1/p) pi~(0,1,2,p) + (alpha/p) pi~(0,floor(p/2),ceil(p/2),p)
// + (1/p) pi~(0,p-2,p-1,p) with alpha the least positive solution of
// alpha + 1 + C(p-1,2) = 0 mod p. p = 2 uses the two-term combination on
// (0,1,2,4),(0,2,3,4). For p = 3 the natural two-term candidate on
// (0,1,2,5),(0,3,4,5) is not integral; it is reported as rejected and a
// certified replacement is found by search.
SparseRayCertificate sparse_ray(unsigned long p);

// Deterministic search for a certified ray among reflection-symmetric
// combinations (a/p) pi~(0,x,y,T) + (b/p) pi~ of the reflected sequence, with
// an optional self-dual middle term, for T up to max_degree. Returns the
// first certified hit in enumeration order.
std::optional<SparseRayCertificate> find_obstructed_ray(
    unsigned long p, int max_degree,
    ExecutionPolicy policy = ExecutionPolicy::parallel);

}  // namespace betti
