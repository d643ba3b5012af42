#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace betti {

// A degree entry is an integer or infinity; infinity is nullopt.
using ExtendedDegree = std::optional<int>;
inline constexpr ExtendedDegree infinite_degree = std::nullopt;

// Order on extended degrees with infinity greatest.
bool ext_leq(const ExtendedDegree& a, const ExtendedDegree& b);
bool ext_less(const ExtendedDegree& a, const ExtendedDegree& b);
std::string ext_str(const ExtendedDegree& a);

// A sequence d_0, d_1, ..., d_n over Z ∪ {∞} with d_i + 1 <= d_{i+1} for
// consecutive finite entries; every entry after an infinite one is infinite.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<ExtendedDegree> entries);
  DegreeSequence(std::initializer_list<ExtendedDegree> entries);

  // Accepts "(0,1,2,inf)" or "0,1,2,inf".
  static DegreeSequence parse(std::string_view text);

  int n() const { return static_cast<int>(entries_.size()) - 1; }
  int size() const { return static_cast<int>(entries_.size()); }
  const ExtendedDegree& operator[](int i) const { return entries_[i]; }
  const std::vector<ExtendedDegree>& entries() const { return entries_; }

  bool finite(int i) const { return entries_[i].has_value(); }
  int degree(int i) const;  // requires finite(i)

  // Index of the last finite entry; -1 when every entry is infinite.
  int length() const;
  bool all_finite() const { return length() == n(); }

  // The reflected sequence (c - d_n, ..., c - d_0); requires all entries finite.
  DegreeSequence dual(int c) const;

  std::string str() const;

  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const DegreeSequence& a, const DegreeSequence& b) {
    return !(a == b);
  }

 private:
  std::vector<ExtendedDegree> entries_;
};

// Termwise partial order with infinity greatest; sizes must match.
bool termwise_leq(const DegreeSequence& a, const DegreeSequence& b);
bool termwise_less(const DegreeSequence& a, const DegreeSequence& b);

// Every valid sequence of length n+1 with entries in [0, max_degree] ∪ {∞},
// in lexicographic order with infinity last.
std::vector<DegreeSequence> all_degree_sequences(int max_degree, int n);

}  // namespace betti
