#include "betti/filtration.hpp"

#include <string>

#include "betti/hilbert.hpp"
#include "betti/pure.hpp"

namespace betti {

bool is_strictly_separated(const DegreeSequence& d, const DegreeSequence& e) {
  if (d.size() != e.size())
    throw ValidationError("separation test on sequences of different lengths");
  if (d.size() < 3)
    throw ValidationError("separation test needs at least three positions");
  return termwise_less(d, e) && ext_leq(d[2], e[1]);
}

bool splits_strongly(const DegreeSequence& d, const DegreeSequence& e, int n) {
  if (d.size() != e.size() || d.n() != n)
    throw ValidationError("splitting test on mismatched sequences");
  if (d.size() < 2)
    throw ValidationError("splitting test needs at least two positions");
  if (!d.finite(n))
    throw ValidationError("splitting test needs a finite last degree in " + d.str());
  if (!e[1]) return true;
  return d.degree(n) - n < *e[1];
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::direct_sum_certified: return "DirectSumCertified";
    case Verdict::clean_filtration_certified: return "CleanFiltrationCertified";
    case Verdict::obstruction_found: return "ObstructionFound";
    case Verdict::inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

void check_hypotheses(const BettiDiagram& d, int n, const AnalyzeOptions& options) {
  if (options.override_hypotheses) return;
  if (n < 2)
    throw ValidationError("analysis requires at least two ring variables");
  if (!is_finite_length_consistent(d, n))
    throw ValidationError(
        "diagram is not finite-length consistent: its Hilbert numerator is "
        "not divisible by (1-t)^" + std::to_string(n));
}

// Flags are computed guardedly so that exploratory (override) runs on short
// or infinite sequences never throw: a pair that cannot satisfy a predicate's
// preconditions simply does not satisfy the predicate.
PairFlags pair_flags_for(const DegreeSequence& d, const DegreeSequence& e) {
  PairFlags flags;
  flags.separated = d.size() >= 3 && is_strictly_separated(d, e);
  flags.strong_split = d.size() >= 2 && d.finite(d.n()) &&
                       splits_strongly(d, e, d.n());
  return flags;
}

struct StepData {
  DecompositionChain raw;              // pi units
  std::vector<BettiDiagram> diagrams;  // c_t * pi_{d^t}
  std::vector<bool> integral;
  std::vector<PairFlags> flags;
};

StepData decompose_with_flags(const BettiDiagram& d) {
  StepData out{bs_decompose(d, Units::pi), {}, {}, {}};
  const auto& steps = out.raw.steps();
  for (const auto& step : steps) {
    out.diagrams.push_back(scale(pure_diagram(step.sequence), step.coefficient));
    out.integral.push_back(is_integral(out.diagrams.back()));
  }
  for (std::size_t t = 0; t + 1 < steps.size(); ++t)
    out.flags.push_back(pair_flags_for(steps[t].sequence, steps[t + 1].sequence));
  return out;
}

}  // namespace

FiltrationReport analyze(const BettiDiagram& d, int n, const AnalyzeOptions& options) {
  check_hypotheses(d, n, options);
  StepData data = decompose_with_flags(d);
  const std::size_t count = data.raw.size();

  FiltrationReport report{data.raw.in_units(Units::pi_tilde),
                          data.flags,
                          data.integral,
                          count == 0 || data.integral[0],
                          Verdict::inconclusive,
                          std::nullopt,
                          -1};

  bool all_integral = true;
  for (bool b : data.integral) all_integral = all_integral && b;
  bool all_strong = true, all_separated = true;
  for (const auto& f : data.flags) {
    all_strong = all_strong && f.strong_split;
    all_separated = all_separated && f.separated;
  }

  // The summand upgrade needs the separation hypothesis as well: the strong
  // inequality alone can hold while d_2 > e_1 (for example on
  // pi~(0,1,3) + pi~(0,2,3), whose multiples are known not to split), and
  // then no embedded submodule is forced in the first place.
  if (all_integral && all_strong && all_separated) {
    report.verdict = Verdict::direct_sum_certified;
    return report;
  }
  if (all_integral && all_separated) {
    report.verdict = Verdict::clean_filtration_certified;
    return report;
  }

  // Peel certified steps from the front: step t can be checked once every
  // earlier step was separated and integral and step t itself is separated
  // from its successor (the last step vacuously is). The first checked
  // non-integral step is an obstruction.
  for (std::size_t t = 0; t < count; ++t) {
    const bool separated = t + 1 < count ? data.flags[t].separated : true;
    if (!separated) break;
    if (!data.integral[t]) {
      report.verdict = Verdict::obstruction_found;
      report.witness = data.diagrams[t];
      report.obstruction_step = static_cast<int>(t);
      break;
    }
  }
  return report;
}

Int minimal_integral_multiple(const BettiDiagram& d, int n, const AnalyzeOptions& options) {
  check_hypotheses(d, n, options);
  StepData data = decompose_with_flags(d);
  const std::size_t count = data.raw.size();

  Int multiple = 1;
  for (std::size_t t = 0; t < count; ++t) {
    const bool separated = t + 1 < count ? data.flags[t].separated : true;
    if (!separated) break;
    multiple = lcm(multiple, denominator_lcm(data.diagrams[t]));
  }
  if (multiple == 1) {
    const Verdict v = analyze(d, n, options).verdict;
    if (v == Verdict::direct_sum_certified || v == Verdict::clean_filtration_certified)
      return 1;
    throw InconclusiveError(
        "no integrality obstruction derivable: every non-integral step lies "
        "beyond the separated prefix");
  }
  return multiple;
}

CutoffVector north_fork_degrees(const BettiDiagram& d) {
  const auto generators_max = max_degree(d, 0);
  const auto syzygies_min = d.n() >= 1 ? min_degree(d, 1) : std::nullopt;
  if (!generators_max || !syzygies_min)
    throw ValidationError("cutoff vector needs nonzero columns 0 and 1");
  CutoffVector f(d.n() + 1);
  f[0] = *generators_max + 1;
  f[1] = *syzygies_min + 1;
  for (int i = 2; i <= d.n(); ++i) {
    f[i] = infinite_degree;
    if (!f[i - 1]) continue;
    for (auto it = d.entries().lower_bound({i, *f[i - 1] + 1});
         it != d.entries().end() && it->first.first == i; ++it) {
      f[i] = it->first.second;
      break;
    }
  }
  return f;
}

BettiDiagram truncate(const BettiDiagram& d, const CutoffVector& f) {
  if (static_cast<int>(f.size()) != d.n() + 1)
    throw ValidationError("cutoff vector length differs from the column count");
  BettiDiagram out(d.n());
  for (const auto& [pos, v] : d.entries()) {
    const auto& cutoff = f[pos.first];
    if (!cutoff || pos.second < *cutoff) out.set(pos.first, pos.second, v);
  }
  return out;
}

BettiDiagram predict_quotient_betti(const BettiDiagram& d, int n,
                                    bool extended_hypotheses,
                                    const AnalyzeOptions& options) {
  check_hypotheses(d, n, options);
  StepData data = decompose_with_flags(d);
  const auto& steps = data.raw.steps();
  if (steps.empty()) return BettiDiagram(d.n());

  // Retain the leading steps whose first-syzygy degree is minimal (just the
  // first step unless extended hypotheses are requested), then demand
  // separation between the last retained step and the first dropped one.
  std::size_t keep = 1;
  if (extended_hypotheses && steps[0].sequence.size() >= 2) {
    while (keep < steps.size() &&
           steps[keep].sequence[1] == steps[0].sequence[1])
      ++keep;
  }
  if (keep < steps.size() &&
      !pair_flags_for(steps[keep - 1].sequence, steps[keep].sequence).separated)
    throw InconclusiveError(
        "leading step is not separated from the rest of the chain");

  BettiDiagram predicted(d.n());
  for (std::size_t t = 0; t < keep; ++t)
    predicted = add(predicted, data.diagrams[t]);

  // Column-0 balance: whatever generator degrees the retained steps do not
  // account for become the free part.
  for (auto it = d.entries().begin();
       it != d.entries().end() && it->first.first == 0; ++it) {
    const Rational gap = it->second - predicted.at(0, it->first.second);
    if (gap.sign() < 0)
      throw InconclusiveError("free part would be negative at degree " +
                              std::to_string(it->first.second));
    predicted.add_to(0, it->first.second, gap);
  }
  return predicted;
}

bool check_free_split(const BettiDiagram& core, const BettiDiagram& free_part, int n) {
  if (core.n() != free_part.n())
    throw ValidationError("core and free part over different column counts");
  if (n < 0) throw ValidationError("negative number of variables");
  for (const auto& [pos, v] : free_part.entries())
    if (pos.first != 0)
      throw ValidationError("free part has an entry outside column 0");

  if (!divisible_by_one_minus_t(hilbert_numerator(core), 2)) return false;
  const auto free_min = min_degree(free_part, 0);
  const auto core_max = max_degree(core, 0);
  if (!free_min || !core_max) return true;
  return *free_min >= *core_max;
}

}  // namespace betti
