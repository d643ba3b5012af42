#include "betti/io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace betti {

std::string format_text(const BettiDiagram& d) {
  std::string out;
  if (d.zero()) {
    for (int i = 0; i <= d.n(); ++i) out += i ? " -" : "-";
    out += '\n';
    return out;
  }
  int max_row = 0;
  for (const auto& [pos, v] : d.entries()) {
    const int row = pos.second - pos.first;
    if (row < 0)
      throw ValidationError("entry at (" + std::to_string(pos.first) + "," +
                            std::to_string(pos.second) +
                            ") lies above row 0; use the JSON format");
    max_row = std::max(max_row, row);
  }
  for (int r = 0; r <= max_row; ++r) {
    for (int i = 0; i <= d.n(); ++i) {
      if (i) out += ' ';
      const Rational v = d.at(i, i + r);
      out += v.is_zero() ? std::string("-") : v.str();
    }
    out += '\n';
  }
  return out;
}

BettiDiagram parse_text(std::string_view text, std::optional<int> column_override) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool saw_blank = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) {
      saw_blank = true;
      continue;
    }
    if (saw_blank) throw ParseError("blank line inside a diagram");
    rows.push_back(std::move(tokens));
  }
  if (rows.empty()) throw ParseError("empty diagram input");

  const std::size_t width = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != width)
      throw ParseError("rows with differing token counts");

  int n = static_cast<int>(width) - 1;
  if (column_override) {
    if (*column_override < n)
      throw ParseError("column override smaller than the layout width");
    n = *column_override;
  }

  BettiDiagram d(n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < width; ++i) {
      const std::string& tok = rows[r][i];
      if (tok == "-") continue;
      d.set(static_cast<int>(i), static_cast<int>(i + r), Rational::parse(tok));
    }
  }
  return d;
}

Json to_json(const BettiDiagram& d) {
  Json j;
  j["n"] = d.n();
  Json entries = Json::array();
  for (const auto& [pos, v] : d.entries()) {
    Json e;
    e["i"] = pos.first;
    e["j"] = pos.second;
    e["v"] = v.str();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

BettiDiagram diagram_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
      throw ParseError("diagram JSON needs fields 'n' and 'entries'");
    BettiDiagram d(j.at("n").get<int>());
    for (const auto& e : j.at("entries")) {
      const int i = e.at("i").get<int>();
      const int deg = e.at("j").get<int>();
      const Rational v = e.at("v").is_string()
                             ? Rational::parse(e.at("v").get<std::string>())
                             : Rational(e.at("v").get<long>());
      if (!d.at(i, deg).is_zero())
        throw ParseError("duplicate entry at (" + std::to_string(i) + "," +
                         std::to_string(deg) + ")");
      d.set(i, deg, v);
    }
    return d;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad diagram JSON: ") + e.what());
  }
}

BettiDiagram parse_diagram(std::string_view text, std::optional<int> column_override) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON input");
    BettiDiagram d = diagram_from_json(j);
    if (column_override && *column_override != d.n())
      throw ParseError("column override conflicts with the JSON 'n' field");
    return d;
  }
  return parse_text(text, column_override);
}

Json to_json(const DecompositionChain& chain) {
  Json j;
  j["units"] = units_name(chain.units());
  Json steps = Json::array();
  for (const auto& step : chain.steps()) {
    Json s;
    s["coefficient"] = step.coefficient.str();
    s["sequence"] = step.sequence.str();
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const FiltrationReport& report) {
  Json j;
  j["verdict"] = std::string(verdict_name(report.verdict));
  j["chain"] = to_json(report.chain);
  Json pairs = Json::array();
  for (const auto& f : report.pair_flags) {
    Json p;
    p["separated"] = f.separated;
    p["strong_split"] = f.strong_split;
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  Json integral = Json::array();
  for (bool b : report.step_integral) integral.push_back(b);
  j["step_integral"] = std::move(integral);
  j["first_step_integral"] = report.first_step_integral;
  if (report.witness) {
    j["obstruction_step"] = report.obstruction_step;
    j["witness"] = to_json(*report.witness);
  } else {
    j["obstruction_step"] = nullptr;
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const SweepReport& report) {
  Json j;
  j["max_degree"] = report.max_degree;
  j["n"] = report.n;
  j["i"] = report.i;
  j["pairs_checked"] = report.pairs_checked;
  j["all_passed"] = report.all_passed();
  if (report.counterexample) {
    Json c;
    c["d"] = report.counterexample->first.str();
    c["e"] = report.counterexample->second.str();
    j["counterexample"] = std::move(c);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

namespace {

Json triplet_json(const Triplet& t) { return Json::array({t.r, t.s, t.t}); }

}  // namespace

Json to_json(const MembershipResult& result) {
  Json j;
  j["triplet"] = triplet_json(result.triplet);
  j["member"] = result.member;
  if (result.member) {
    Json parts = Json::array();
    for (const auto& g : result.decomposition) parts.push_back(triplet_json(g));
    j["decomposition"] = std::move(parts);
  } else if (result.exclusion) {
    Json e;
    e["family"] = result.exclusion->family;
    e["asserted"] = result.exclusion->asserted;
    j["exclusion"] = std::move(e);
  }
  return j;
}

Json to_json(const EnumerationReport& report) {
  Json j;
  j["bound"] = report.bound;
  j["admissible"] = report.admissible;
  j["members"] = report.members;
  j["excluded"] = report.excluded;
  j["agreement"] = report.agreement();
  if (report.disagreement)
    j["disagreement"] = triplet_json(*report.disagreement);
  else
    j["disagreement"] = nullptr;
  Json rs = Json::array();
  for (const auto& r : report.results) rs.push_back(to_json(r));
  j["results"] = std::move(rs);
  return j;
}

Json to_json(const SparseRayCertificate& cert) {
  Json j;
  j["p"] = cert.p;
  j["alpha"] = cert.alpha;
  Json seqs = Json::array();
  for (const auto& s : cert.sequences) seqs.push_back(s.str());
  j["sequences"] = std::move(seqs);
  Json ws = Json::array();
  for (const auto& w : cert.weights) ws.push_back(w.str());
  j["weights"] = std::move(ws);
  j["obstruction_multiple"] = cert.obstruction_multiple.get_str();
  j["diagram"] = to_json(cert.diagram);
  if (cert.rejected) {
    Json r;
    Json rseqs = Json::array();
    for (const auto& s : cert.rejected->sequences) rseqs.push_back(s.str());
    r["sequences"] = std::move(rseqs);
    Json rws = Json::array();
    for (const auto& w : cert.rejected->weights) rws.push_back(w.str());
    r["weights"] = std::move(rws);
    r["diagram"] = to_json(cert.rejected->diagram);
    r["failing_entry"] = Json::array({cert.rejected->failing_position.first,
                                      cert.rejected->failing_position.second});
    r["failing_value"] = cert.rejected->failing_value.str();
    j["rejected_candidate"] = std::move(r);
  } else {
    j["rejected_candidate"] = nullptr;
  }
  return j;
}

}  // namespace betti
