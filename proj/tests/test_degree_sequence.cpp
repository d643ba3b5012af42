#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betti/degree_sequence.hpp"
#include "betti/errors.hpp"

using namespace betti;

TEST_CASE("validation") {
  CHECK_NOTHROW(DegreeSequence({0, 1, 2, 5}));
  CHECK_NOTHROW(DegreeSequence({0, infinite_degree, infinite_degree}));
  CHECK_NOTHROW(DegreeSequence({-3, 0, 4}));
  CHECK_THROWS_AS(DegreeSequence({0, 0, 2}), ValidationError);
  CHECK_THROWS_AS(DegreeSequence({2, 1}), ValidationError);
  CHECK_THROWS_AS(DegreeSequence({0, infinite_degree, 2}), ValidationError);
  CHECK_THROWS_AS(DegreeSequence(std::vector<ExtendedDegree>{}), ValidationError);
}

TEST_CASE("length and accessors") {
  const DegreeSequence d{0, 1, 2, infinite_degree};
  CHECK(d.n() == 3);
  CHECK(d.length() == 2);
  CHECK_FALSE(d.all_finite());
  CHECK(d.degree(1) == 1);
  CHECK_THROWS_AS(d.degree(3), ValidationError);
  CHECK(DegreeSequence({0, 1, 2, 5}).all_finite());
}

TEST_CASE("parse and print round-trip") {
  CHECK(DegreeSequence::parse("(0,1,2,inf)") ==
        DegreeSequence({0, 1, 2, infinite_degree}));
  CHECK(DegreeSequence::parse("0, 1, 2, 5") == DegreeSequence({0, 1, 2, 5}));
  CHECK(DegreeSequence::parse("(-2,0,3)").str() == "(-2,0,3)");
  CHECK(DegreeSequence({0, 1, 2, infinite_degree}).str() == "(0,1,2,inf)");
  CHECK_THROWS_AS(DegreeSequence::parse("(0,1,"), ParseError);
  CHECK_THROWS_AS(DegreeSequence::parse("(0,x)"), ParseError);
  CHECK_THROWS_AS(DegreeSequence::parse(""), ParseError);
}

TEST_CASE("termwise order treats infinity as greatest") {
  const DegreeSequence a{0, 1, 2, 5};
  const DegreeSequence b{0, 2, 3, 5};
  const DegreeSequence c{0, 1, 2, infinite_degree};
  CHECK(termwise_less(a, b));
  CHECK_FALSE(termwise_less(b, a));
  CHECK(termwise_less(a, c));
  CHECK_FALSE(termwise_less(a, a));
  CHECK(termwise_leq(a, a));
  CHECK_THROWS_AS(termwise_leq(a, DegreeSequence({0, 1})), ValidationError);
}

TEST_CASE("dual reflects about c") {
  const DegreeSequence d{0, 1, 2, 5};
  CHECK(d.dual(5) == DegreeSequence({0, 3, 4, 5}));
  CHECK(d.dual(5).dual(5) == d);
  CHECK_THROWS_AS(DegreeSequence({0, infinite_degree}).dual(3), ValidationError);
}

TEST_CASE("enumeration covers the window exactly once") {
  const auto seqs = all_degree_sequences(2, 1);
  // (0,1), (0,2), (1,2), (0,inf), (1,inf), (2,inf), (inf,inf)
  CHECK(seqs.size() == 7);
  for (std::size_t a = 0; a < seqs.size(); ++a)
    for (std::size_t b = a + 1; b < seqs.size(); ++b)
      CHECK(seqs[a] != seqs[b]);

  // Sequences of length 5 over [0,8] ∪ {inf}: sum of C(9,k) for k = 0..5,
  // i.e. 1 + 9 + 36 + 84 + 126 + 126.
  CHECK(all_degree_sequences(8, 4).size() == 382);
}
