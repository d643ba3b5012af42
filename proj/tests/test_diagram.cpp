#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betti/diagram.hpp"

using namespace betti;

namespace {

BettiDiagram pitilde_0125() {
  BettiDiagram d(3);
  d.set(0, 0, 6);
  d.set(1, 1, 15);
  d.set(2, 2, 10);
  d.set(3, 5, 1);
  return d;
}

}  // namespace

TEST_CASE("entries are sparse and nonzero") {
  BettiDiagram d(3);
  CHECK(d.zero());
  d.set(1, 2, Rational(3, 2));
  CHECK(d.at(1, 2) == Rational(3, 2));
  CHECK(d.at(2, 2).is_zero());
  d.set(1, 2, 0);
  CHECK(d.zero());
  d.add_to(0, 0, 1);
  d.add_to(0, 0, -1);
  CHECK(d.zero());
  CHECK_THROWS_AS(d.set(4, 0, 1), ValidationError);
  CHECK_THROWS_AS(BettiDiagram(-1), ValidationError);
}

TEST_CASE("scaling by 1/5 matches the hand-computed table") {
  const BettiDiagram fifth = scale(pitilde_0125(), Rational(1, 5));
  CHECK(fifth.at(0, 0) == Rational(6, 5));
  CHECK(fifth.at(1, 1) == Rational(3));
  CHECK(fifth.at(2, 2) == Rational(2));
  CHECK(fifth.at(3, 5) == Rational(1, 5));
  CHECK_FALSE(is_integral(fifth));
  CHECK(denominator_lcm(fifth) == 5);
}

TEST_CASE("subtraction guards non-negativity") {
  const BettiDiagram d = pitilde_0125();
  CHECK(subtract_nonneg(d, d).zero());
  const BettiDiagram bigger = scale(d, 2);
  CHECK(subtract_nonneg(bigger, d) == d);
  CHECK_THROWS_AS(subtract_nonneg(d, bigger), NonNegativityViolation);
  CHECK_THROWS_AS(add(d, BettiDiagram(2)), ValidationError);
}

TEST_CASE("column helpers") {
  BettiDiagram d(3);
  d.set(1, 2, 1);
  d.set(1, 5, 1);
  d.set(0, 0, 1);
  CHECK(min_degree(d, 1) == 2);
  CHECK(max_degree(d, 1) == 5);
  CHECK_FALSE(min_degree(d, 2).has_value());
  CHECK_FALSE(max_degree(d, 3).has_value());
  CHECK_FALSE(column_support_is_prefix(d) == false);  // columns {0,1}
  d.set(3, 4, 1);
  CHECK_FALSE(column_support_is_prefix(d));  // gap at column 2
  CHECK(all_nonnegative(d));
  d.set(2, 2, -1);
  CHECK_FALSE(all_nonnegative(d));
}

TEST_CASE("negative degrees are allowed") {
  BettiDiagram d(1);
  d.set(0, -2, Rational(1));
  CHECK(d.at(0, -2) == Rational(1));
  CHECK(min_degree(d, 0) == -2);
}
