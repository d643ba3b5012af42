#include "betti/sparse_ray.hpp"

#include <string>

#include "betti/filtration.hpp"
#include "betti/pure.hpp"

namespace betti {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

namespace {

BettiDiagram combine(const std::vector<DegreeSequence>& sequences,
                     const std::vector<Rational>& weights) {
  BettiDiagram out(sequences.front().n());
  for (std::size_t k = 0; k < sequences.size(); ++k)
    out = add(out, scale(smallest_integral_point(sequences[k]), weights[k]));
  return out;
}

std::optional<Position> first_non_integral(const BettiDiagram& d) {
  for (const auto& [pos, v] : d.entries())
    if (!v.is_integer()) return pos;
  return std::nullopt;
}

Int binomial2(unsigned long m) {  // C(m, 2)
  return Int(m) * Int(m - 1) / 2;
}

// Shared certificate checks: integral diagram, separated consecutive pairs,
// obstruction multiple exactly p, and a decomposition matching the weights.
void verify_certificate(const SparseRayCertificate& cert) {
  if (const auto bad = first_non_integral(cert.diagram))
    throw ConstructionError("certificate diagram has non-integer entry " +
                            cert.diagram.at(bad->first, bad->second).str() +
                            " at (" + std::to_string(bad->first) + "," +
                            std::to_string(bad->second) + ")");
  for (std::size_t k = 0; k + 1 < cert.sequences.size(); ++k)
    if (!is_strictly_separated(cert.sequences[k], cert.sequences[k + 1]))
      throw ConstructionError("sequences " + cert.sequences[k].str() + " and " +
                              cert.sequences[k + 1].str() +
                              " are not strictly separated");
  if (cert.obstruction_multiple != Int(cert.p))
    throw ConstructionError("obstruction multiple is " +
                            cert.obstruction_multiple.get_str() + ", expected " +
                            std::to_string(cert.p));
  const DecompositionChain chain = bs_decompose(cert.diagram, Units::pi_tilde);
  if (chain.size() != cert.sequences.size())
    throw ConstructionError("decomposition length differs from the construction");
  for (std::size_t k = 0; k < chain.size(); ++k)
    if (chain.steps()[k].sequence != cert.sequences[k] ||
        chain.steps()[k].coefficient != cert.weights[k])
      throw ConstructionError("decomposition does not recover the construction");
}

// Builds a certificate candidate and verifies it; nullopt when the diagram is
// not even integral (the cheap gate used by the search).
std::optional<SparseRayCertificate> certify(unsigned long p,
                                            std::vector<DegreeSequence> sequences,
                                            std::vector<Rational> weights,
                                            unsigned long alpha) {
  SparseRayCertificate cert;
  cert.p = p;
  cert.alpha = alpha;
  cert.diagram = combine(sequences, weights);
  cert.sequences = std::move(sequences);
  cert.weights = std::move(weights);
  if (first_non_integral(cert.diagram)) return std::nullopt;
  for (std::size_t k = 0; k + 1 < cert.sequences.size(); ++k)
    if (!is_strictly_separated(cert.sequences[k], cert.sequences[k + 1]))
      return std::nullopt;
  try {
    cert.obstruction_multiple = minimal_integral_multiple(cert.diagram, 3);
  } catch (const InconclusiveError&) {
    return std::nullopt;
  }
  if (cert.obstruction_multiple != Int(p)) return std::nullopt;
  verify_certificate(cert);
  return cert;
}

SparseRayCertificate main_construction(unsigned long p) {
  const int ip = static_cast<int>(p);
  const DegreeSequence d0{0, 1, 2, ip};
  const DegreeSequence d1{0, ip / 2, ip - ip / 2, ip};
  const DegreeSequence d2{0, ip - 2, ip - 1, ip};

  // Least positive alpha with alpha + 1 + C(p-1,2) = 0 mod p.
  const Int corner = binomial2(p - 1);
  unsigned long alpha = 1;
  while ((Int(alpha) + 1 + corner) % Int(p) != 0) ++alpha;

  SparseRayCertificate cert;
  cert.p = p;
  cert.alpha = alpha;
  cert.sequences = {d0, d1, d2};
  cert.weights = {Rational(1, Int(p)), Rational(Int(alpha), Int(p)),
                  Rational(1, Int(p))};
  cert.diagram = combine(cert.sequences, cert.weights);
  cert.obstruction_multiple = minimal_integral_multiple(cert.diagram, 3);

  // Construction-specific checks before the shared ones.
  const BettiDiagram top = smallest_integral_point(d0);
  const BettiDiagram mid = smallest_integral_point(d1);
  const BettiDiagram bot = smallest_integral_point(d2);
  if (top.at(0, 0) != Rational(corner))
    throw ConstructionError("corner entry of pi~" + d0.str() + " is " +
                            top.at(0, 0).str() + ", expected C(p-1,2)");
  if (bot.at(3, ip) != Rational(corner))
    throw ConstructionError("corner entry of pi~" + d2.str() + " is " +
                            bot.at(3, ip).str() + ", expected C(p-1,2)");
  const Rational one{1};
  const Rational pp{Int(p)};
  if (mid.at(0, 0) != one || mid.at(1, ip / 2) != pp ||
      mid.at(2, ip - ip / 2) != pp || mid.at(3, ip) != one)
    throw ConstructionError("pi~" + d1.str() + " is not (1,p,p,1)");
  if (cert.diagram.at(0, 0) != Rational(Int(1) + Int(alpha) + corner, Int(p)))
    throw ConstructionError("corner entry of the combination is not "
                            "(1 + alpha + C(p-1,2)) / p");

  verify_certificate(cert);
  return cert;
}

}  // namespace

std::optional<SparseRayCertificate> find_obstructed_ray(unsigned long p,
                                                        int max_degree,
                                                        ExecutionPolicy policy) {
  if (!is_prime(p)) throw ValidationError("p must be prime");

  struct Candidate {
    std::vector<DegreeSequence> sequences;
    unsigned long a = 0, b = 0;
  };
  std::vector<Candidate> candidates;
  for (int top = 3; top <= max_degree; ++top) {
    for (int x = 1; x < top; ++x) {
      for (int y = x + 1; y < top; ++y) {
        const DegreeSequence d0{0, x, y, top};
        const DegreeSequence d2 = d0.dual(top);
        // Two-term reflection-symmetric combinations.
        if (d0 != d2 && termwise_less(d0, d2) && y <= top - y)
          for (unsigned long a = 1; a < p; ++a)
            for (unsigned long b = 1; b < p; ++b)
              candidates.push_back({{d0, d2}, a, b});
        // Three-term with a self-dual middle sequence (0,u,top-u,top); u >= y
        // keeps the first pair separated.
        for (int u = y; 2 * u < top; ++u) {
          const DegreeSequence mid{0, u, top - u, top};
          if (!termwise_less(d0, mid) || !termwise_less(mid, d2)) continue;
          for (unsigned long a = 1; a < p; ++a)
            for (unsigned long b = 1; b < p; ++b)
              candidates.push_back({{d0, mid, d2}, a, b});
        }
      }
    }
  }

  const long long count = static_cast<long long>(candidates.size());
  long long first_hit = count;

  const auto hits = [&](long long idx) {
    const Candidate& c = candidates[idx];
    std::vector<Rational> weights;
    weights.push_back(Rational(Int(c.a), Int(p)));
    weights.push_back(Rational(Int(c.b), Int(p)));
    if (c.sequences.size() == 3) weights.push_back(Rational(Int(c.a), Int(p)));
    try {
      return certify(p, c.sequences, std::move(weights), c.b).has_value();
    } catch (const Error&) {
      return false;  // keep the parallel loop exception-free
    }
  };

  if (policy == ExecutionPolicy::serial) {
    for (long long idx = 0; idx < count && first_hit == count; ++idx)
      if (hits(idx)) first_hit = idx;
  } else {
#pragma omp parallel for schedule(dynamic, 8) reduction(min : first_hit)
    for (long long idx = 0; idx < count; ++idx)
      if (idx < first_hit && hits(idx)) first_hit = idx;
  }

  if (first_hit == count) return std::nullopt;
  const Candidate& c = candidates[first_hit];
  std::vector<Rational> weights;
  weights.push_back(Rational(Int(c.a), Int(p)));
  weights.push_back(Rational(Int(c.b), Int(p)));
  if (c.sequences.size() == 3) weights.push_back(Rational(Int(c.a), Int(p)));
  return certify(p, c.sequences, std::move(weights), c.b);
}

SparseRayCertificate sparse_ray(unsigned long p) {
  if (!is_prime(p)) throw ValidationError("p must be prime");
  if (p >= 5) return main_construction(p);

  if (p == 2) {
    const DegreeSequence d0{0, 1, 2, 4};
    const DegreeSequence d1{0, 2, 3, 4};
    auto cert = certify(2, {d0, d1}, {Rational(1, 2), Rational(1, 2)}, 1);
    if (!cert) throw ConstructionError("two-term combination for p = 2 failed");
    return *cert;
  }

  // p = 3: the natural two-term candidate on (0,1,2,5),(0,3,4,5) with weights
  // (1/3, 2/3) has a non-integer corner entry. Report it and search for a
  // certified replacement instead.
  RejectedCandidate rejected;
  rejected.sequences = {DegreeSequence{0, 1, 2, 5}, DegreeSequence{0, 3, 4, 5}};
  rejected.weights = {Rational(1, 3), Rational(2, 3)};
  rejected.diagram = combine(rejected.sequences, rejected.weights);
  const auto bad = first_non_integral(rejected.diagram);
  if (!bad)
    throw ConstructionError("expected the p = 3 two-term candidate to fail "
                            "integrality, but it is integral");
  rejected.failing_position = *bad;
  rejected.failing_value = rejected.diagram.at(bad->first, bad->second);

  auto cert = find_obstructed_ray(3, 6);
  if (!cert)
    throw ConstructionError("no certified ray for p = 3 within the search window");
  cert->rejected = std::move(rejected);
  return *cert;
}

}  // namespace betti
