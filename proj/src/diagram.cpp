#include "betti/diagram.hpp"

#include <climits>
#include <string>

namespace betti {

namespace {

std::string pos_str(int column, int degree) {
  return "(" + std::to_string(column) + "," + std::to_string(degree) + ")";
}

}  // namespace

BettiDiagram::BettiDiagram(int n) : n_(n) {
  if (n < 0) throw ValidationError("diagram needs at least one column");
}

void BettiDiagram::check_column(int column) const {
  if (column < 0 || column > n_)
    throw ValidationError("column " + std::to_string(column) + " outside 0.." +
                          std::to_string(n_));
}

Rational BettiDiagram::at(int column, int degree) const {
  check_column(column);
  const auto it = entries_.find({column, degree});
  return it == entries_.end() ? Rational() : it->second;
}

void BettiDiagram::set(int column, int degree, Rational value) {
  check_column(column);
  if (value.is_zero())
    entries_.erase({column, degree});
  else
    entries_[{column, degree}] = std::move(value);
}

void BettiDiagram::add_to(int column, int degree, const Rational& delta) {
  set(column, degree, at(column, degree) + delta);
}

static void require_same_shape(const BettiDiagram& a, const BettiDiagram& b) {
  if (a.n() != b.n())
    throw ValidationError("diagrams over different column counts: " +
                          std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

BettiDiagram add(const BettiDiagram& a, const BettiDiagram& b) {
  require_same_shape(a, b);
  BettiDiagram out = a;
  for (const auto& [pos, v] : b.entries()) out.add_to(pos.first, pos.second, v);
  return out;
}

BettiDiagram scale(const BettiDiagram& d, const Rational& c) {
  BettiDiagram out(d.n());
  if (c.is_zero()) return out;
  for (const auto& [pos, v] : d.entries()) out.set(pos.first, pos.second, v * c);
  return out;
}

BettiDiagram subtract_nonneg(const BettiDiagram& a, const BettiDiagram& b) {
  require_same_shape(a, b);
  BettiDiagram out = a;
  for (const auto& [pos, v] : b.entries()) {
    const Rational r = out.at(pos.first, pos.second) - v;
    if (r.sign() < 0)
      throw NonNegativityViolation("entry " + pos_str(pos.first, pos.second) +
                                   " would become " + r.str());
    out.set(pos.first, pos.second, r);
  }
  return out;
}

bool all_nonnegative(const BettiDiagram& d) {
  for (const auto& [pos, v] : d.entries())
    if (v.sign() < 0) return false;
  return true;
}

bool is_integral(const BettiDiagram& d) {
  for (const auto& [pos, v] : d.entries())
    if (!v.is_integer()) return false;
  return true;
}

Int denominator_lcm(const BettiDiagram& d) {
  Int m = 1;
  for (const auto& [pos, v] : d.entries()) m = lcm(m, v.denominator());
  return m;
}

std::optional<int> min_degree(const BettiDiagram& d, int column) {
  const auto it = d.entries().lower_bound({column, INT_MIN});
  if (it == d.entries().end() || it->first.first != column) return std::nullopt;
  return it->first.second;
}

std::optional<int> max_degree(const BettiDiagram& d, int column) {
  auto it = d.entries().lower_bound({column + 1, INT_MIN});
  if (it == d.entries().begin()) return std::nullopt;
  --it;
  if (it->first.first != column) return std::nullopt;
  return it->first.second;
}

bool column_support_is_prefix(const BettiDiagram& d) {
  bool gap = false;
  for (int i = 0; i <= d.n(); ++i) {
    const bool occupied = min_degree(d, i).has_value();
    if (occupied && gap) return false;
    if (!occupied) gap = true;
  }
  return true;
}

}  // namespace betti
