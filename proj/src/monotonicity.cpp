#include "betti/monotonicity.hpp"

#include <cstdlib>

#include "betti/errors.hpp"

namespace betti {

bool ratio_less(const StrandRatio& a, const StrandRatio& b) {
  if (a.infinite) return false;
  if (b.infinite) return true;
  return a.value < b.value;
}

StrandRatio strand_ratio(const DegreeSequence& d, int i) {
  if (i < 0 || i >= d.n())
    throw ValidationError("strand index out of range for " + d.str());
  if (!d.finite(i))
    throw ValidationError("strand ratio needs a finite degree at position " +
                          std::to_string(i));
  if (!d.finite(i + 1)) return {true, Rational()};
  // beta_i / beta_{i+1} = prod_{k != i+1} |d_{i+1} - d_k| / prod_{k != i} |d_i - d_k|
  Int num = 1, den = 1;
  for (int k = 0; k <= d.n(); ++k) {
    if (!d.finite(k)) break;
    if (k != i + 1) num *= std::abs(d.degree(i + 1) - d.degree(k));
    if (k != i) den *= std::abs(d.degree(i) - d.degree(k));
  }
  return {false, Rational(num, den)};
}

bool check_monotonicity(const DegreeSequence& d, const DegreeSequence& e, int i) {
  if (d.size() != e.size())
    throw ValidationError("monotonicity check on sequences of different lengths");
  if (i < 0 || i >= d.n())
    throw ValidationError("strand index out of range");
  if (d[i] != e[i] || d[i + 1] != e[i + 1])
    throw ValidationError("positions " + std::to_string(i) + " and " +
                          std::to_string(i + 1) + " must agree");
  if (!termwise_less(d, e))
    throw ValidationError(d.str() + " is not termwise below " + e.str());
  return ratio_less(strand_ratio(d, i), strand_ratio(e, i));
}

namespace {

struct PairOutcome {
  bool applicable = false;
  bool passed = true;
};

PairOutcome evaluate_pair(const DegreeSequence& d, const DegreeSequence& e, int i) {
  if (d[i] != e[i] || d[i + 1] != e[i + 1]) return {};
  if (!d.finite(i) || !d.finite(i + 1)) return {};
  if (!termwise_less(d, e)) return {};
  return {true, ratio_less(strand_ratio(d, i), strand_ratio(e, i))};
}

}  // namespace

SweepReport sweep_verify(int max_degree, int n, int i, ExecutionPolicy policy) {
  if (n < 1) throw ValidationError("sweep needs at least two positions");
  if (i < 0 || i >= n) throw ValidationError("strand index out of range");
  if (max_degree < 0) throw ValidationError("negative degree bound");

  const std::vector<DegreeSequence> seqs = all_degree_sequences(max_degree, n);
  const long long count = static_cast<long long>(seqs.size());
  const long long total = count * count;

  SweepReport report{max_degree, n, i, 0, std::nullopt};
  long long checked = 0;
  long long first_bad = total;  // flattened index of the first failing pair

  if (policy == ExecutionPolicy::serial) {
    for (long long p = 0; p < total; ++p) {
      const auto outcome = evaluate_pair(seqs[p / count], seqs[p % count], i);
      if (!outcome.applicable) continue;
      ++checked;
      if (!outcome.passed && p < first_bad) first_bad = p;
    }
  } else {
#pragma omp parallel for schedule(static) reduction(+ : checked) reduction(min : first_bad)
    for (long long p = 0; p < total; ++p) {
      const auto outcome = evaluate_pair(seqs[p / count], seqs[p % count], i);
      if (!outcome.applicable) continue;
      ++checked;
      if (!outcome.passed && p < first_bad) first_bad = p;
    }
  }

  report.pairs_checked = checked;
  if (first_bad < total)
    report.counterexample = {seqs[first_bad / count], seqs[first_bad % count]};
  return report;
}

}  // namespace betti
