// Command-line front end: exact Betti-diagram arithmetic, cone
// decomposition, filtration certificates, the monotonicity sweep, the quiver
// semigroup, and sparse-ray certificates. Deterministic byte-for-byte output.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "betti/io.hpp"
#include "betti/pure.hpp"

namespace {

using namespace betti;

// success = 0, parse/usage = 1, not in cone = 2, obstruction = 3,
// inconclusive = 4
constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_not_in_cone = 2;
constexpr int exit_obstruction = 3;
constexpr int exit_inconclusive = 4;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BettiDiagram load_diagram(const std::string& path, int n_override) {
  return parse_diagram(read_input(path),
                       n_override >= 0 ? std::optional<int>(n_override)
                                       : std::nullopt);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string cutoff_str(const CutoffVector& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += ext_str(f[i]);
  }
  return s + ")";
}

struct CommonFlags {
  bool json = false;
  int n_override = -1;
  std::string input;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_input = true) {
  cmd->add_flag("--json", flags.json, "structured JSON output");
  if (with_input) {
    cmd->add_option("input", flags.input,
                    "diagram file (text or JSON); '-' or absent reads stdin");
    cmd->add_option("--n", flags.n_override,
                    "number of ring variables (columns minus one); defaults "
                    "to the input layout");
  }
}

int run_pure(const std::string& literal, bool json, bool integral) {
  const DegreeSequence d = DegreeSequence::parse(literal);
  const BettiDiagram out = integral ? smallest_integral_point(d) : pure_diagram(d);
  if (json)
    emit(to_json(out));
  else
    std::cout << format_text(out);
  return exit_ok;
}

int run_decompose(const CommonFlags& flags, const std::string& units_word) {
  const Units units = units_word == "pi" ? Units::pi : Units::pi_tilde;
  const BettiDiagram d = load_diagram(flags.input, flags.n_override);
  const DecompositionChain chain = bs_decompose(d, units);
  if (flags.json)
    emit(to_json(chain));
  else
    std::cout << chain.str();
  return exit_ok;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::direct_sum_certified:
    case Verdict::clean_filtration_certified:
      return exit_ok;
    case Verdict::obstruction_found:
      return exit_obstruction;
    case Verdict::inconclusive:
      return exit_inconclusive;
  }
  return exit_inconclusive;
}

int run_check_split(const CommonFlags& flags, bool override_hypotheses) {
  const BettiDiagram d = load_diagram(flags.input, flags.n_override);
  const FiltrationReport report = analyze(d, d.n(), {override_hypotheses});
  if (flags.json) {
    emit(to_json(report));
    return verdict_exit(report.verdict);
  }
  std::cout << "verdict: " << verdict_name(report.verdict) << "\n";
  std::cout << "chain:\n";
  const auto& steps = report.chain.steps();
  for (std::size_t t = 0; t < steps.size(); ++t) {
    std::cout << "  " << steps[t].coefficient.str() << " * pi~"
              << steps[t].sequence.str()
              << (report.step_integral[t] ? "" : "  [non-integral]") << "\n";
    if (t + 1 < steps.size()) {
      const auto& f = report.pair_flags[t];
      std::cout << "    pair " << t << ": separated="
                << (f.separated ? "yes" : "no")
                << " strong_split=" << (f.strong_split ? "yes" : "no") << "\n";
    }
  }
  if (report.witness) {
    std::cout << "witness (non-integral step " << report.obstruction_step
              << "):\n"
              << format_text(*report.witness);
  }
  return verdict_exit(report.verdict);
}

int run_north_fork(const CommonFlags& flags) {
  const BettiDiagram d = load_diagram(flags.input, flags.n_override);
  const CutoffVector f = north_fork_degrees(d);
  const BettiDiagram cut = truncate(d, f);
  if (flags.json) {
    Json j;
    j["cutoffs"] = cutoff_str(f);
    j["truncation"] = to_json(cut);
    emit(j);
    return exit_ok;
  }
  std::cout << "f = " << cutoff_str(f) << "\n"
            << "truncation:\n"
            << format_text(cut);
  return exit_ok;
}

int run_quotient_predict(const CommonFlags& flags, bool extended) {
  const BettiDiagram d = load_diagram(flags.input, flags.n_override);
  const BettiDiagram predicted = predict_quotient_betti(d, d.n(), extended);
  if (flags.json)
    emit(to_json(predicted));
  else
    std::cout << format_text(predicted);
  return exit_ok;
}

int run_monotonicity(const std::vector<int>& sweep, bool json, bool serial) {
  const int max_degree = sweep.at(0);
  const int n = sweep.at(1);
  const ExecutionPolicy policy =
      serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel;
  bool all_ok = true;
  Json all = Json::array();
  for (int i = 0; i < n; ++i) {
    const SweepReport report = sweep_verify(max_degree, n, i, policy);
    all_ok = all_ok && report.all_passed();
    if (json) {
      all.push_back(to_json(report));
    } else {
      std::cout << "i=" << i << ": pairs=" << report.pairs_checked << " ";
      if (report.all_passed())
        std::cout << "all strict\n";
      else
        std::cout << "COUNTEREXAMPLE d=" << report.counterexample->first.str()
                  << " e=" << report.counterexample->second.str() << "\n";
    }
  }
  if (json) emit(all);
  return all_ok ? exit_ok : exit_obstruction;
}

int run_semigroup_check(long r, long s, long t, bool json) {
  const MembershipResult result = is_in_bmod({r, s, t});
  if (json) {
    emit(to_json(result));
    return result.member ? exit_ok : exit_obstruction;
  }
  if (result.member) {
    std::cout << result.triplet.str() << ": member\n";
    std::cout << "decomposition:";
    for (const auto& part : result.decomposition) std::cout << " " << part.str();
    std::cout << "\n";
    return exit_ok;
  }
  std::cout << result.triplet.str() << ": excluded [" << result.exclusion->family
            << "]\n";
  return exit_obstruction;
}

int run_semigroup_generators(bool json) {
  if (json) {
    Json out = Json::array();
    for (const auto& g : generators()) {
      Json item;
      item["triplet"] = Json::array({g.triplet.r, g.triplet.s, g.triplet.t});
      item["diagram"] = to_json(g.diagram);
      out.push_back(std::move(item));
    }
    emit(out);
    return exit_ok;
  }
  bool first = true;
  for (const auto& g : generators()) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << g.triplet.str() << ":\n" << format_text(g.diagram);
  }
  return exit_ok;
}

int run_semigroup_enumerate(int bound, bool json, bool serial) {
  const EnumerationReport report = enumerate_members(
      bound, serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel);
  if (json) {
    emit(to_json(report));
    return report.agreement() ? exit_ok : exit_obstruction;
  }
  for (const auto& r : report.results) {
    std::cout << r.triplet.str() << ": " << (r.member ? "member" : "excluded");
    if (!r.member) std::cout << " [" << r.exclusion->family << "]";
    std::cout << "\n";
  }
  std::cout << "admissible=" << report.admissible
            << " members=" << report.members << " excluded=" << report.excluded
            << " agreement=" << (report.agreement() ? "yes" : "NO") << "\n";
  return report.agreement() ? exit_ok : exit_obstruction;
}

int run_sparse_ray(unsigned long p, bool json) {
  const SparseRayCertificate cert = sparse_ray(p);
  if (json) {
    emit(to_json(cert));
    return exit_ok;
  }
  // Default output: the certificate as JSON, then the diagram as text.
  emit(to_json(cert));
  if (cert.rejected)
    std::cout << "rejected candidate: entry ("
              << cert.rejected->failing_position.first << ","
              << cert.rejected->failing_position.second << ") = "
              << cert.rejected->failing_value.str() << " is not an integer\n";
  std::cout << "diagram:\n" << format_text(cert.diagram);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Boij-Soderberg diagram calculator"};
  app.require_subcommand(1);

  // pure / integral-point
  std::string pure_seq, integral_seq;
  bool pure_json = false, integral_json = false;
  auto* pure_cmd = app.add_subcommand("pure", "pure diagram of a degree sequence");
  pure_cmd->add_option("sequence", pure_seq, "degree sequence, e.g. \"(0,1,2,4)\"")
      ->required();
  pure_cmd->add_flag("--json", pure_json, "structured JSON output");
  auto* integral_cmd = app.add_subcommand(
      "integral-point", "smallest integral point on a pure ray");
  integral_cmd
      ->add_option("sequence", integral_seq, "degree sequence, e.g. \"(0,1,2,5)\"")
      ->required();
  integral_cmd->add_flag("--json", integral_json, "structured JSON output");

  // decompose
  CommonFlags decompose_flags;
  std::string units_word = "pitilde";
  auto* decompose_cmd =
      app.add_subcommand("decompose", "greedy decomposition into pure diagrams");
  add_common(decompose_cmd, decompose_flags);
  decompose_cmd->add_option("--units", units_word, "coefficient units")
      ->check(CLI::IsMember({"pi", "pitilde"}));

  // check-split
  CommonFlags check_flags;
  bool override_hypotheses = false;
  auto* check_cmd = app.add_subcommand(
      "check-split", "filtration/splitting certificates and obstructions");
  add_common(check_cmd, check_flags);
  check_cmd->add_flag("--override-hypotheses", override_hypotheses,
                      "skip the finite-length and n >= 2 checks");

  // north-fork
  CommonFlags fork_flags;
  auto* fork_cmd = app.add_subcommand(
      "north-fork", "cutoff vector and truncation through the minimal first syzygies");
  add_common(fork_cmd, fork_flags);

  // quotient-predict
  CommonFlags quotient_flags;
  bool extended = false;
  auto* quotient_cmd = app.add_subcommand(
      "quotient-predict", "Betti diagram of the cutoff presentation's cokernel");
  add_common(quotient_cmd, quotient_flags);
  quotient_cmd->add_flag("--extended-hypotheses", extended,
                         "keep every leading step with minimal first-syzygy degree");

  // monotonicity
  std::vector<int> sweep_args;
  bool mono_json = false, mono_serial = false;
  auto* mono_cmd =
      app.add_subcommand("monotonicity", "strand-ratio monotonicity sweep");
  mono_cmd->add_option("--sweep", sweep_args, "max_degree n")
      ->expected(2)
      ->required();
  mono_cmd->add_flag("--json", mono_json, "structured JSON output");
  mono_cmd->add_flag("--serial", mono_serial, "run the serial reference kernel");

  // semigroup
  auto* semi_cmd = app.add_subcommand("semigroup", "quiver diagram semigroup");
  semi_cmd->require_subcommand(1);
  std::vector<long> rst;
  bool semi_json = false, semi_serial = false;
  auto* semi_check = semi_cmd->add_subcommand("check", "membership of a triplet");
  semi_check->add_option("rst", rst, "coordinates r s t")->expected(3)->required();
  semi_check->add_flag("--json", semi_json, "structured JSON output");
  bool gens_json = false;
  auto* semi_gens = semi_cmd->add_subcommand("generators", "the ten minimal generators");
  semi_gens->add_flag("--json", gens_json, "structured JSON output");
  int enum_bound = 0;
  bool enum_json = false;
  auto* semi_enum =
      semi_cmd->add_subcommand("enumerate", "classify all triplets up to a bound");
  semi_enum->add_option("--bound", enum_bound, "bound on r+s+t")->required();
  semi_enum->add_flag("--json", enum_json, "structured JSON output");
  semi_enum->add_flag("--serial", semi_serial, "run the serial reference kernel");

  // sparse-ray
  unsigned long prime = 0;
  bool ray_json = false;
  auto* ray_cmd = app.add_subcommand(
      "sparse-ray", "integral ray obstructed at every multiple below p");
  ray_cmd->add_option("p", prime, "prime")->required();
  ray_cmd->add_flag("--json", ray_json, "structured JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (pure_cmd->parsed()) return run_pure(pure_seq, pure_json, false);
    if (integral_cmd->parsed()) return run_pure(integral_seq, integral_json, true);
    if (decompose_cmd->parsed()) return run_decompose(decompose_flags, units_word);
    if (check_cmd->parsed()) return run_check_split(check_flags, override_hypotheses);
    if (fork_cmd->parsed()) return run_north_fork(fork_flags);
    if (quotient_cmd->parsed()) return run_quotient_predict(quotient_flags, extended);
    if (mono_cmd->parsed()) return run_monotonicity(sweep_args, mono_json, mono_serial);
    if (semi_cmd->parsed()) {
      if (semi_check->parsed())
        return run_semigroup_check(rst.at(0), rst.at(1), rst.at(2), semi_json);
      if (semi_gens->parsed()) return run_semigroup_generators(gens_json);
      if (semi_enum->parsed())
        return run_semigroup_enumerate(enum_bound, enum_json, semi_serial);
    }
    if (ray_cmd->parsed()) return run_sparse_ray(prime, ray_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const NotInConeError& e) {
    std::cerr << "not in cone: " << e.what() << "\n";
    if (e.remainder()) {
      try {
        std::cerr << "remainder:\n" << format_text(*e.remainder());
      } catch (const ValidationError&) {
        std::cerr << "remainder: " << to_json(*e.remainder()).dump() << "\n";
      }
    }
    return exit_not_in_cone;
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return exit_inconclusive;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
