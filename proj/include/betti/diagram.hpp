#pragma once

#include <map>
#include <optional>
#include <utility>

#include "betti/errors.hpp"
#include "betti/rational.hpp"

namespace betti {

// (column index i, internal degree j)
using Position = std::pair<int, int>;

// Sparse table of graded Betti numbers over n+1 homological columns.
// Stored entries are nonzero; an absent entry is zero.
class BettiDiagram {
 public:
  explicit BettiDiagram(int n);

  int n() const { return n_; }
  bool zero() const { return entries_.empty(); }
  const std::map<Position, Rational>& entries() const { return entries_; }

  Rational at(int column, int degree) const;
  void set(int column, int degree, Rational value);
  void add_to(int column, int degree, const Rational& delta);

  friend bool operator==(const BettiDiagram& a, const BettiDiagram& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const BettiDiagram& a, const BettiDiagram& b) {
    return !(a == b);
  }

 private:
  void check_column(int column) const;

  int n_;
  std::map<Position, Rational> entries_;
};

BettiDiagram add(const BettiDiagram& a, const BettiDiagram& b);
BettiDiagram scale(const BettiDiagram& d, const Rational& c);
// Throws NonNegativityViolation if any result entry would be negative.
BettiDiagram subtract_nonneg(const BettiDiagram& a, const BettiDiagram& b);

bool all_nonnegative(const BettiDiagram& d);
bool is_integral(const BettiDiagram& d);
Int denominator_lcm(const BettiDiagram& d);

std::optional<int> min_degree(const BettiDiagram& d, int column);
std::optional<int> max_degree(const BettiDiagram& d, int column);
// True when the set of nonzero columns is {0, ..., t} for some t (or empty).
bool column_support_is_prefix(const BettiDiagram& d);

// Raised when a diagram cannot be decomposed as a positive chain of pure
// diagrams; carries the partial remainder when one exists.
class NotInConeError : public Error {
 public:
  explicit NotInConeError(const std::string& what) : Error(what) {}
  NotInConeError(const std::string& what, BettiDiagram remainder)
      : Error(what), remainder_(std::move(remainder)) {}

  const std::optional<BettiDiagram>& remainder() const { return remainder_; }

 private:
  std::optional<BettiDiagram> remainder_;
};

}  // namespace betti
