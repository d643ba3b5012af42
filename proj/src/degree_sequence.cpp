#include "betti/degree_sequence.hpp"

#include <algorithm>
#include <cctype>

#include "betti/errors.hpp"

namespace betti {

bool ext_leq(const ExtendedDegree& a, const ExtendedDegree& b) {
  if (!b) return true;   // anything <= infinity
  if (!a) return false;  // infinity <= finite fails
  return *a <= *b;
}

bool ext_less(const ExtendedDegree& a, const ExtendedDegree& b) {
  return ext_leq(a, b) && a != b;
}

std::string ext_str(const ExtendedDegree& a) {
  return a ? std::to_string(*a) : std::string("inf");
}

DegreeSequence::DegreeSequence(std::vector<ExtendedDegree> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("empty degree sequence");
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    const auto& prev = entries_[i - 1];
    const auto& cur = entries_[i];
    if (!prev && cur)
      throw ValidationError("finite degree after an infinite one in " + str());
    if (prev && cur && *cur <= *prev)
      throw ValidationError("degree sequence must increase by at least one: " + str());
  }
}

DegreeSequence::DegreeSequence(std::initializer_list<ExtendedDegree> entries)
    : DegreeSequence(std::vector<ExtendedDegree>(entries)) {}

int DegreeSequence::degree(int i) const {
  if (!entries_[i])
    throw ValidationError("entry " + std::to_string(i) + " of " + str() + " is infinite");
  return *entries_[i];
}

int DegreeSequence::length() const {
  for (int i = n(); i >= 0; --i)
    if (entries_[i]) return i;
  return -1;
}

DegreeSequence DegreeSequence::dual(int c) const {
  if (!all_finite())
    throw ValidationError("dual of a sequence with infinite entries");
  std::vector<ExtendedDegree> out(entries_.size());
  for (int i = 0; i <= n(); ++i) out[n() - i] = c - *entries_[i];
  return DegreeSequence(std::move(out));
}

std::string DegreeSequence::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += ext_str(entries_[i]);
  }
  s += ')';
  return s;
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  if (s.empty()) throw ParseError("empty degree sequence literal");
  std::vector<ExtendedDegree> entries;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok == "inf") {
      entries.push_back(infinite_degree);
    } else {
      std::string_view t = tok;
      bool neg = !t.empty() && t.front() == '-';
      std::string_view digits = neg ? t.substr(1) : t;
      if (digits.empty() ||
          !std::all_of(digits.begin(), digits.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; }))
        throw ParseError("bad degree token '" + tok + "'");
      entries.push_back(std::stoi(tok));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == s.size()) throw ParseError("trailing comma in '" + std::string(text) + "'");
  }
  return DegreeSequence(std::move(entries));
}

bool termwise_leq(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size())
    throw ValidationError("comparing degree sequences of different lengths");
  for (int i = 0; i < a.size(); ++i)
    if (!ext_leq(a[i], b[i])) return false;
  return true;
}

bool termwise_less(const DegreeSequence& a, const DegreeSequence& b) {
  return termwise_leq(a, b) && a != b;
}

namespace {

void extend(std::vector<ExtendedDegree>& cur, int len, int max_degree,
            std::vector<DegreeSequence>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.emplace_back(cur);
    return;
  }
  const bool prev_infinite = !cur.empty() && !cur.back();
  if (!prev_infinite) {
    const int lo = cur.empty() ? 0 : *cur.back() + 1;
    for (int v = lo; v <= max_degree; ++v) {
      cur.push_back(v);
      extend(cur, len, max_degree, out);
      cur.pop_back();
    }
  }
  cur.push_back(infinite_degree);
  extend(cur, len, max_degree, out);
  cur.pop_back();
}

}  // namespace

std::vector<DegreeSequence> all_degree_sequences(int max_degree, int n) {
  if (n < 0) throw ValidationError("negative sequence length");
  std::vector<DegreeSequence> out;
  std::vector<ExtendedDegree> cur;
  extend(cur, n + 1, max_degree, out);
  return out;
}

}  // namespace betti
