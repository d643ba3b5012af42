#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betti/diagram.hpp"
#include "betti/parallel.hpp"

namespace betti {

// Coordinates on the three-ray simplex spanned by the pure diagrams of
// (0,1,2,4), (0,1,3,4) and (0,2,3,4): the diagram of (r,s,t) is
// 4r*pi_(0,1,2,4) + 2s*pi_(0,1,3,4) + 4t*pi_(0,2,3,4).
struct Triplet {
  long r = 0;
  long s = 0;
  long t = 0;

  long sum() const { return r + s + t; }
  std::string str() const;

  friend bool operator==(const Triplet& a, const Triplet& b) {
    return a.r == b.r && a.s == b.s && a.t == b.t;
  }
  friend bool operator!=(const Triplet& a, const Triplet& b) { return !(a == b); }
};

BettiDiagram triplet_to_diagram(const Triplet& triplet);

// Inverts the parametrization (r = beta_{2,2}, t = beta_{1,2},
// s = 3*beta_{1,1} - 4*beta_{2,2}) and validates by round trip. Throws
// NotInSimplexError off the image.
Triplet diagram_to_triplet(const BettiDiagram& d);

// A triplet is admissible when its diagram has integer entries.
bool is_admissible(const Triplet& triplet);
// Closed form for the same condition: r+s = 0 mod 3, s+t = 0 mod 3,
// r+s+t = 0 mod 2. Kept separate so the two routes can be checked against
// each other.
bool admissibility_congruences(const Triplet& triplet);

struct Generator {
  Triplet triplet;
  BettiDiagram diagram;
};

// The ten minimal generators of the semigroup of module diagrams on the
// simplex, in a fixed order.
const std::vector<Generator>& generators();

struct Exclusion {
  std::string family;
  // True when the exclusion is adopted from the source analysis without an
  // independent derivation here.
  bool asserted = false;
};

struct MembershipResult {
  Triplet triplet;
  bool member = false;
  std::vector<Triplet> decomposition;  // generator list with repetition
  std::optional<Exclusion> exclusion;
};

// Case analysis on s and the residues of r, t mod 6. Pure classifier; the
// generator search below must independently agree.
bool classify_member(const Triplet& triplet, Exclusion* why = nullptr);

// Complete bounded search for a representation as a sum of generators. Every
// generator has coordinate sum >= 4, so multiplicities are bounded and the
// search is exhaustive.
std::optional<std::vector<Triplet>> search_decomposition(const Triplet& triplet);

// Runs both the classifier and the search and cross-checks them. Throws
// ValidationError on inadmissible triplets.
MembershipResult is_in_bmod(const Triplet& triplet);

struct EnumerationReport {
  int bound = 0;
  long long admissible = 0;
  long long members = 0;
  long long excluded = 0;
  std::optional<Triplet> disagreement;  // classifier vs search, if any
  std::vector<MembershipResult> results;

  bool agreement() const { return !disagreement.has_value(); }
};

// Every admissible triplet with r+s+t <= bound, classified by both routes.
EnumerationReport enumerate_members(int bound,
                                    ExecutionPolicy policy = ExecutionPolicy::parallel,
                                    bool keep_results = true);

struct CongruenceSweepReport {
  int bound = 0;
  long long checked = 0;
  std::optional<Triplet> mismatch;

  bool agreement() const { return !mismatch.has_value(); }
};

// Brute-force integrality against the congruence closed form for every
// triplet (admissible or not) with r+s+t <= bound.
CongruenceSweepReport verify_admissibility_congruences(
    int bound, ExecutionPolicy policy = ExecutionPolicy::parallel);

}  // namespace betti
