#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betti/filtration.hpp"
#include "betti/io.hpp"
#include "betti/pure.hpp"
#include "betti/sparse_ray.hpp"

using namespace betti;

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(sparse_ray(6), ValidationError);
}

TEST_CASE("p = 5 reproduces the classic 3x4 diagram") {
  const SparseRayCertificate cert = sparse_ray(5);
  CHECK(cert.alpha == 3);
  REQUIRE(cert.sequences.size() == 3);
  CHECK(cert.sequences[0] == DegreeSequence({0, 1, 2, 5}));
  CHECK(cert.sequences[1] == DegreeSequence({0, 2, 3, 5}));
  CHECK(cert.sequences[2] == DegreeSequence({0, 3, 4, 5}));
  CHECK(cert.weights[0] == Rational(1, 5));
  CHECK(cert.weights[1] == Rational(3, 5));
  CHECK(cert.weights[2] == Rational(1, 5));
  CHECK(format_text(cert.diagram) ==
        "2 3 2 -\n"
        "- 3 3 -\n"
        "- 2 3 2\n");
  CHECK(cert.obstruction_multiple == 5);
  CHECK_FALSE(cert.rejected.has_value());
}

TEST_CASE("p = 2 uses the two-term combination") {
  const SparseRayCertificate cert = sparse_ray(2);
  REQUIRE(cert.sequences.size() == 2);
  CHECK(cert.sequences[0] == DegreeSequence({0, 1, 2, 4}));
  CHECK(cert.sequences[1] == DegreeSequence({0, 2, 3, 4}));
  CHECK(cert.weights[0] == Rational(1, 2));
  CHECK(cert.weights[1] == Rational(1, 2));
  CHECK(format_text(cert.diagram) ==
        "2 4 3 -\n"
        "- 3 4 2\n");
  CHECK(is_integral(cert.diagram));
  CHECK(cert.obstruction_multiple == 2);
}

TEST_CASE("p = 3: the natural candidate is rejected and a repair is certified") {
  const SparseRayCertificate cert = sparse_ray(3);
  REQUIRE(cert.rejected.has_value());
  const RejectedCandidate& rejected = *cert.rejected;
  CHECK(rejected.sequences[0] == DegreeSequence({0, 1, 2, 5}));
  CHECK(rejected.sequences[1] == DegreeSequence({0, 3, 4, 5}));
  CHECK(rejected.failing_position == Position{0, 0});
  CHECK(rejected.failing_value == Rational(8, 3));

  REQUIRE(cert.sequences.size() == 2);
  CHECK(cert.sequences[0] == DegreeSequence({0, 1, 2, 6}));
  CHECK(cert.sequences[1] == DegreeSequence({0, 4, 5, 6}));
  CHECK(cert.weights[0] == Rational(1, 3));
  CHECK(cert.weights[1] == Rational(2, 3));
  CHECK(cert.alpha == 2);
  CHECK(format_text(cert.diagram) ==
        "4 8 5 -\n"
        "- - - -\n"
        "- - - -\n"
        "- 10 16 7\n");
  CHECK(cert.obstruction_multiple == 3);
}

TEST_CASE("p = 7: alpha solves the corner congruence") {
  const SparseRayCertificate cert = sparse_ray(7);
  CHECK(cert.alpha == 5);  // 5 + 1 + 15 = 21 = 0 mod 7
  CHECK(is_integral(cert.diagram));
  CHECK(cert.obstruction_multiple == 7);
  const BettiDiagram mid = smallest_integral_point(cert.sequences[1]);
  CHECK(mid.at(0, 0) == Rational(1));
  CHECK(mid.at(1, 3) == Rational(7));
  CHECK(mid.at(2, 4) == Rational(7));
  CHECK(mid.at(3, 7) == Rational(1));
}

TEST_CASE("certificate corners carry the binomial values") {
  for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
    const SparseRayCertificate cert = sparse_ray(p);
    const Int corner = Int(p - 1) * Int(p - 2) / 2;
    CHECK(smallest_integral_point(cert.sequences[0]).at(0, 0) == Rational(corner));
    CHECK(smallest_integral_point(cert.sequences[2]).at(3, static_cast<int>(p)) ==
          Rational(corner));
    CHECK(cert.diagram.at(0, 0) ==
          Rational(Int(1) + Int(cert.alpha) + corner, Int(p)));
    CHECK(is_strictly_separated(cert.sequences[0], cert.sequences[1]));
    CHECK(is_strictly_separated(cert.sequences[1], cert.sequences[2]));
  }
}

TEST_CASE("scaling below the prime keeps the obstruction") {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    const SparseRayCertificate cert = sparse_ray(p);
    for (unsigned long c = 1; c < p; ++c) {
      const FiltrationReport r =
          analyze(scale(cert.diagram, Rational(Int(c))), 3);
      CHECK(r.verdict == Verdict::obstruction_found);
    }
    const FiltrationReport at_p =
        analyze(scale(cert.diagram, Rational(Int(p))), 3);
    CHECK(at_p.first_step_integral);
    // p = 2, 3 even split strongly; the larger primes certify a filtration.
    const bool certified = at_p.verdict == Verdict::clean_filtration_certified ||
                           at_p.verdict == Verdict::direct_sum_certified;
    CHECK(certified);
  }
}

TEST_CASE("the search is deterministic and reproduces the fixed points") {
  const auto found2 = find_obstructed_ray(2, 6, ExecutionPolicy::serial);
  REQUIRE(found2.has_value());
  CHECK(found2->sequences[0] == DegreeSequence({0, 1, 2, 4}));
  CHECK(found2->sequences[1] == DegreeSequence({0, 2, 3, 4}));
  CHECK(found2->weights[0] == Rational(1, 2));

  const auto found3 = find_obstructed_ray(3, 6, ExecutionPolicy::serial);
  REQUIRE(found3.has_value());
  CHECK(found3->sequences[0] == DegreeSequence({0, 1, 2, 6}));
  CHECK(found3->sequences[1] == DegreeSequence({0, 4, 5, 6}));
  CHECK(found3->weights[0] == Rational(1, 3));
  CHECK(found3->weights[1] == Rational(2, 3));

  // Nothing certifiable below the first workable window.
  CHECK_FALSE(find_obstructed_ray(3, 5, ExecutionPolicy::serial).has_value());
}
