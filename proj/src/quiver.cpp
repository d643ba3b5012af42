#include "betti/quiver.hpp"

#include <array>

#include "betti/pure.hpp"

namespace betti {

namespace {

const BettiDiagram& ray_0124() {
  static const BettiDiagram d = pure_diagram(DegreeSequence{0, 1, 2, 4});
  return d;
}
const BettiDiagram& ray_0134() {
  static const BettiDiagram d = pure_diagram(DegreeSequence{0, 1, 3, 4});
  return d;
}
const BettiDiagram& ray_0234() {
  static const BettiDiagram d = pure_diagram(DegreeSequence{0, 2, 3, 4});
  return d;
}

constexpr std::array<Position, 6> simplex_positions = {{
    {0, 0}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 4},
}};

const std::array<Triplet, 10> generator_triplets = {{
    {6, 0, 0}, {0, 0, 6}, {1, 2, 1}, {3, 3, 0}, {0, 3, 3},
    {1, 8, 1}, {3, 9, 0}, {0, 9, 3}, {0, 12, 0}, {0, 18, 0},
}};

}  // namespace

std::string Triplet::str() const {
  return "(" + std::to_string(r) + "," + std::to_string(s) + "," +
         std::to_string(t) + ")";
}

BettiDiagram triplet_to_diagram(const Triplet& triplet) {
  if (triplet.r < 0 || triplet.s < 0 || triplet.t < 0)
    throw ValidationError("triplet coordinates must be non-negative");
  BettiDiagram d = scale(ray_0124(), Rational(4 * triplet.r));
  d = add(d, scale(ray_0134(), Rational(2 * triplet.s)));
  d = add(d, scale(ray_0234(), Rational(4 * triplet.t)));
  return d;
}

Triplet diagram_to_triplet(const BettiDiagram& d) {
  if (d.n() != 3) throw NotInSimplexError("simplex diagrams have four columns");
  for (const auto& [pos, v] : d.entries()) {
    bool allowed = false;
    for (const auto& p : simplex_positions) allowed = allowed || p == pos;
    if (!allowed)
      throw NotInSimplexError("entry at (" + std::to_string(pos.first) + "," +
                              std::to_string(pos.second) +
                              ") is outside the simplex support");
  }
  const Rational r = d.at(2, 2);
  const Rational t = d.at(1, 2);
  const Rational s = Rational(3) * d.at(1, 1) - Rational(4) * d.at(2, 2);
  for (const Rational& c : {r, s, t})
    if (!c.is_integer() || c.sign() < 0)
      throw NotInSimplexError("diagram is not a non-negative integer point of "
                              "the parametrization");
  Triplet triplet{r.numerator().get_si(), s.numerator().get_si(),
                  t.numerator().get_si()};
  if (triplet_to_diagram(triplet) != d)
    throw NotInSimplexError("diagram fails the round-trip check");
  return triplet;
}

bool is_admissible(const Triplet& triplet) {
  if (triplet.r < 0 || triplet.s < 0 || triplet.t < 0) return false;
  return is_integral(triplet_to_diagram(triplet));
}

bool admissibility_congruences(const Triplet& triplet) {
  if (triplet.r < 0 || triplet.s < 0 || triplet.t < 0) return false;
  return (triplet.r + triplet.s) % 3 == 0 && (triplet.s + triplet.t) % 3 == 0 &&
         (triplet.r + triplet.s + triplet.t) % 2 == 0;
}

const std::vector<Generator>& generators() {
  static const std::vector<Generator> gens = [] {
    std::vector<Generator> out;
    for (const auto& t : generator_triplets)
      out.push_back({t, triplet_to_diagram(t)});
    return out;
  }();
  return gens;
}

bool classify_member(const Triplet& triplet, Exclusion* why) {
  const auto excluded = [&](std::string family, bool asserted = false) {
    if (why) *why = {std::move(family), asserted};
    return false;
  };
  const long r = triplet.r, s = triplet.s, t = triplet.t;
  switch (s) {
    case 0:
      if (r % 6 == 0 && t % 6 == 0) return true;
      return excluded("s=0, r and t not both divisible by 6");
    case 1:
      return r % 6 == 2 ? excluded("s=1, family (2+6γ,1,5+6α)")
                        : excluded("s=1, family (5+6γ,1,2+6α)");
    case 2:
      if (r % 6 == 1) return true;
      return excluded("s=2, family (4+6γ,2,4+6α)");
    case 3:
      return true;
    case 4:
      if (r % 6 == 2) return true;
      return excluded("s=4, family (5+6γ,4,5+6α)", true);
    case 5:
      return true;
    case 6:
      if (r == 0 && t == 0) return excluded("s=6 exception");
      return true;
    default:
      return true;
  }
}

namespace {

bool search_from(std::size_t index, Triplet remaining, std::vector<Triplet>& picked) {
  if (remaining.r == 0 && remaining.s == 0 && remaining.t == 0) return true;
  const auto& gens = generators();
  if (index == gens.size()) return false;
  if (remaining.sum() < 4) return false;  // below every generator's sum

  const Triplet& g = gens[index].triplet;
  long max_mult = remaining.sum();  // overwritten below; every g has a positive coordinate
  if (g.r > 0) max_mult = std::min(max_mult, remaining.r / g.r);
  if (g.s > 0) max_mult = std::min(max_mult, remaining.s / g.s);
  if (g.t > 0) max_mult = std::min(max_mult, remaining.t / g.t);

  for (long m = max_mult; m >= 0; --m) {
    Triplet rest{remaining.r - m * g.r, remaining.s - m * g.s,
                 remaining.t - m * g.t};
    const std::size_t before = picked.size();
    for (long k = 0; k < m; ++k) picked.push_back(g);
    if (search_from(index + 1, rest, picked)) return true;
    picked.resize(before);
  }
  return false;
}

}  // namespace

std::optional<std::vector<Triplet>> search_decomposition(const Triplet& triplet) {
  if (triplet.r < 0 || triplet.s < 0 || triplet.t < 0)
    throw ValidationError("triplet coordinates must be non-negative");
  std::vector<Triplet> picked;
  if (search_from(0, triplet, picked)) return picked;
  return std::nullopt;
}

MembershipResult is_in_bmod(const Triplet& triplet) {
  if (!is_admissible(triplet))
    throw ValidationError("triplet " + triplet.str() +
                          " is not admissible: its diagram is not integral");
  Exclusion why;
  const bool by_cases = classify_member(triplet, &why);
  auto found = search_decomposition(triplet);
  if (by_cases != found.has_value())
    throw Error("case analysis and generator search disagree at " + triplet.str());

  MembershipResult result;
  result.triplet = triplet;
  result.member = by_cases;
  if (found)
    result.decomposition = std::move(*found);
  else
    result.exclusion = why;
  return result;
}

namespace {

std::vector<Triplet> admissible_triplets_up_to(int bound) {
  std::vector<Triplet> out;
  for (long r = 0; r <= bound; ++r)
    for (long s = 0; r + s <= bound; ++s)
      for (long t = 0; r + s + t <= bound; ++t)
        if (is_admissible({r, s, t})) out.push_back({r, s, t});
  return out;
}

}  // namespace

EnumerationReport enumerate_members(int bound, ExecutionPolicy policy,
                                    bool keep_results) {
  if (bound < 0) throw ValidationError("negative enumeration bound");
  const std::vector<Triplet> triplets = admissible_triplets_up_to(bound);
  const long long count = static_cast<long long>(triplets.size());

  std::vector<MembershipResult> results(triplets.size());
  std::vector<char> agree(triplets.size(), 1);

  const auto work = [&](long long idx) {
    const Triplet& triplet = triplets[idx];
    Exclusion why;
    const bool by_cases = classify_member(triplet, &why);
    auto found = search_decomposition(triplet);
    agree[idx] = by_cases == found.has_value();
    MembershipResult& r = results[idx];
    r.triplet = triplet;
    r.member = found.has_value();
    if (found)
      r.decomposition = std::move(*found);
    else
      r.exclusion = why;
  };

  if (policy == ExecutionPolicy::serial) {
    for (long long idx = 0; idx < count; ++idx) work(idx);
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long idx = 0; idx < count; ++idx) work(idx);
  }

  EnumerationReport report;
  report.bound = bound;
  report.admissible = count;
  for (long long idx = 0; idx < count; ++idx) {
    if (!agree[idx] && !report.disagreement) report.disagreement = triplets[idx];
    if (results[idx].member)
      ++report.members;
    else
      ++report.excluded;
  }
  if (keep_results) report.results = std::move(results);
  return report;
}

CongruenceSweepReport verify_admissibility_congruences(int bound,
                                                       ExecutionPolicy policy) {
  if (bound < 0) throw ValidationError("negative sweep bound");
  std::vector<Triplet> triplets;
  for (long r = 0; r <= bound; ++r)
    for (long s = 0; r + s <= bound; ++s)
      for (long t = 0; r + s + t <= bound; ++t) triplets.push_back({r, s, t});
  const long long count = static_cast<long long>(triplets.size());

  long long first_bad = count;
  if (policy == ExecutionPolicy::serial) {
    for (long long idx = 0; idx < count; ++idx)
      if (is_admissible(triplets[idx]) != admissibility_congruences(triplets[idx]) &&
          idx < first_bad)
        first_bad = idx;
  } else {
#pragma omp parallel for schedule(static) reduction(min : first_bad)
    for (long long idx = 0; idx < count; ++idx)
      if (is_admissible(triplets[idx]) != admissibility_congruences(triplets[idx]) &&
          idx < first_bad)
        first_bad = idx;
  }

  CongruenceSweepReport report;
  report.bound = bound;
  report.checked = count;
  if (first_bad < count) report.mismatch = triplets[first_bad];
  return report;
}

}  // namespace betti
