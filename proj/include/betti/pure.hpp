#pragma once

#include "betti/degree_sequence.hpp"
#include "betti/diagram.hpp"

namespace betti {

// The pure diagram of a degree sequence: column i carries the single entry
// 1 / prod_{k != i, d_k finite} |d_i - d_k| at degree d_i.
BettiDiagram pure_diagram(const DegreeSequence& d);

// The multiplier m with smallest_integral_point(d) == m * pure_diagram(d):
// the lcm of the denominators of the pure diagram's entries.
Int pure_denominator_lcm(const DegreeSequence& d);

// The smallest point with integer entries on the ray spanned by the pure
// diagram; its entries have collective gcd 1.
BettiDiagram smallest_integral_point(const DegreeSequence& d);

// The minimal nonzero degree of each column, as a degree sequence (infinite
// for empty columns). Throws ValidationError on the zero diagram and
// NotInConeError when the minima do not form a valid sequence or a nonzero
// column follows an empty one.
DegreeSequence top_strand(const BettiDiagram& d);

}  // namespace betti
