#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "betti/decompose.hpp"
#include "betti/io.hpp"
#include "betti/pure.hpp"

using namespace betti;

namespace {

BettiDiagram parse(const char* text) { return parse_text(text); }

const char* ex15_text =
    "2 3 2 -\n"
    "- 3 3 -\n"
    "- 2 3 2\n";

const char* e6_text =
    "11 - - - - -\n"
    "- 60 128 90 32 -\n"
    "- 144 300 128 60 -\n"
    "- - - 280 240 69\n";

}  // namespace

TEST_CASE("the three-step chain of the 3x4 example") {
  const DecompositionChain chain = bs_decompose(parse(ex15_text));
  REQUIRE(chain.size() == 3);
  CHECK(chain.units() == Units::pi_tilde);
  CHECK(chain.steps()[0].coefficient == Rational(1, 5));
  CHECK(chain.steps()[0].sequence == DegreeSequence({0, 1, 2, 5}));
  CHECK(chain.steps()[1].coefficient == Rational(3, 5));
  CHECK(chain.steps()[1].sequence == DegreeSequence({0, 2, 3, 5}));
  CHECK(chain.steps()[2].coefficient == Rational(1, 5));
  CHECK(chain.steps()[2].sequence == DegreeSequence({0, 3, 4, 5}));
  CHECK(chain.str() ==
        "1/5 * pi~(0,1,2,5)\n"
        "3/5 * pi~(0,2,3,5)\n"
        "1/5 * pi~(0,3,4,5)\n");
  CHECK(chain.reconstruct(3) == parse(ex15_text));
}

TEST_CASE("unit conversion multiplies by the integral-point multiplier") {
  const DecompositionChain tilde = bs_decompose(parse(ex15_text));
  const DecompositionChain raw = tilde.in_units(Units::pi);
  CHECK(raw.steps()[0].coefficient == Rational(12));   // (1/5) * 60
  CHECK(raw.steps()[1].coefficient == Rational(18));   // (3/5) * 30
  CHECK(raw.steps()[2].coefficient == Rational(12));   // (1/5) * 60
  CHECK(raw.in_units(Units::pi_tilde) == tilde);
  CHECK(raw.reconstruct(3) == parse(ex15_text));
  CHECK(raw.str() ==
        "12 * pi(0,1,2,5)\n"
        "18 * pi(0,2,3,5)\n"
        "12 * pi(0,3,4,5)\n");
}

TEST_CASE("the six-column example decomposes with coefficients 1,2,1,1") {
  const DecompositionChain chain = bs_decompose(parse(e6_text));
  REQUIRE(chain.size() == 4);
  CHECK(chain.steps()[0].coefficient == Rational(1));
  CHECK(chain.steps()[0].sequence == DegreeSequence({0, 2, 3, 4, 5, 8}));
  CHECK(chain.steps()[1].coefficient == Rational(2));
  CHECK(chain.steps()[1].sequence == DegreeSequence({0, 2, 3, 5, 6, 8}));
  CHECK(chain.steps()[2].coefficient == Rational(1));
  CHECK(chain.steps()[2].sequence == DegreeSequence({0, 3, 4, 5, 6, 8}));
  CHECK(chain.steps()[3].coefficient == Rational(1));
  CHECK(chain.steps()[3].sequence == DegreeSequence({0, 3, 4, 6, 7, 8}));
  CHECK(chain.reconstruct(5) == parse(e6_text));
}

TEST_CASE("a pure integral point decomposes as itself") {
  const DegreeSequence d{0, 2, 3, 5};
  const DecompositionChain chain = bs_decompose(smallest_integral_point(d));
  REQUIRE(chain.size() == 1);
  CHECK(chain.steps()[0].coefficient == Rational(1));
  CHECK(chain.steps()[0].sequence == d);
}

TEST_CASE("membership in the cone") {
  BettiDiagram one(3);
  one.set(0, 0, 1);
  CHECK(is_in_cone(one));
  const DecompositionChain chain = bs_decompose(one);
  REQUIRE(chain.size() == 1);
  CHECK(chain.steps()[0].sequence ==
        DegreeSequence({0, infinite_degree, infinite_degree, infinite_degree}));
  CHECK(chain.steps()[0].coefficient == Rational(1));

  CHECK(is_in_cone(parse(ex15_text)));
  CHECK(is_in_cone(scale(parse(ex15_text), 5)));
  CHECK(is_in_cone(BettiDiagram(2)));

  BettiDiagram gap(3);
  gap.set(0, 0, 1);
  gap.set(2, 2, 1);
  CHECK_FALSE(is_in_cone(gap));

  BettiDiagram negative(2);
  negative.set(0, 0, -1);
  CHECK_FALSE(is_in_cone(negative));
  CHECK_THROWS_AS(bs_decompose(negative), NotInConeError);
}

TEST_CASE("failures carry the partial remainder") {
  BettiDiagram d(2);
  d.set(0, 0, 1);
  d.set(1, 1, 1);
  d.set(1, 2, 1);  // after one step column 0 empties while column 1 does not
  try {
    bs_decompose(d);
    FAIL("expected NotInConeError");
  } catch (const NotInConeError& e) {
    REQUIRE(e.remainder().has_value());
    CHECK_FALSE(e.remainder()->zero());
    CHECK(e.remainder()->at(1, 2) == Rational(1));
  }
}

TEST_CASE("negative internal degrees flow through the whole stack") {
  const DegreeSequence d{-2, -1, 0, 1};
  const BettiDiagram p = smallest_integral_point(d);
  CHECK(p.at(0, -2) == Rational(1));
  const DecompositionChain chain = bs_decompose(p);
  REQUIRE(chain.size() == 1);
  CHECK(chain.steps()[0].sequence == d);
  CHECK(chain.steps()[0].coefficient == Rational(1));
}

TEST_CASE("scaling equivariance") {
  const BettiDiagram d = parse(ex15_text);
  const Rational c(7, 3);
  const DecompositionChain base = bs_decompose(d);
  const DecompositionChain scaled = bs_decompose(scale(d, c));
  REQUIRE(base.size() == scaled.size());
  for (std::size_t t = 0; t < base.size(); ++t) {
    CHECK(scaled.steps()[t].sequence == base.steps()[t].sequence);
    CHECK(scaled.steps()[t].coefficient == base.steps()[t].coefficient * c);
  }
}

TEST_CASE("fuzz: random chains are recovered exactly") {
  std::mt19937 rng(20240811);
  auto rand_int = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  for (int trial = 0; trial < 300; ++trial) {
    const int n = rand_int(1, 4);
    const int steps = rand_int(1, 5);

    // Build a strictly increasing chain of degree sequences with entries
    // bounded by 10, allowing tails to fall off to infinity.
    std::vector<DegreeSequence> chain;
    std::vector<ExtendedDegree> cur(n + 1);
    int v = rand_int(0, 2);
    for (int i = 0; i <= n; ++i) {
      cur[i] = v;
      v += rand_int(1, 2);
    }
    chain.emplace_back(cur);
    while (static_cast<int>(chain.size()) < steps) {
      bool changed = false;
      for (int i = n; i >= 0; --i) {
        if (!cur[i]) continue;
        const int room_above =
            (i == n || !cur[i + 1]) ? 10 - *cur[i] : *cur[i + 1] - *cur[i] - 1;
        if (room_above > 0 && rand_int(0, 2) == 0) {
          cur[i] = *cur[i] + rand_int(1, room_above);
          changed = true;
        } else if (i == n && rand_int(0, 3) == 0) {
          cur[i] = infinite_degree;
          changed = true;
        }
      }
      if (!changed) break;
      chain.emplace_back(cur);
    }

    BettiDiagram sum(n);
    std::vector<Rational> coeffs;
    for (const auto& seq : chain) {
      const Rational c(rand_int(1, 9));
      coeffs.push_back(c);
      sum = add(sum, scale(smallest_integral_point(seq), c));
    }

    const DecompositionChain found = bs_decompose(sum);
    REQUIRE(found.size() == chain.size());
    for (std::size_t t = 0; t < chain.size(); ++t) {
      CHECK(found.steps()[t].sequence == chain[t]);
      CHECK(found.steps()[t].coefficient == coeffs[t]);
    }
    CHECK(found.reconstruct(n) == sum);
    // Idempotence: re-decomposing the reconstruction changes nothing.
    CHECK(bs_decompose(found.reconstruct(n)) == found);
  }
}
