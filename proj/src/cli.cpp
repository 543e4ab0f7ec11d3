#include "magnus/cli.hpp"

#include <chrono>
#include <filesystem>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "magnus/certifier.hpp"
#include "magnus/errors.hpp"
#include "magnus/io.hpp"
#include "magnus/oracle.hpp"
#include "magnus/presentation.hpp"
#include "magnus/report.hpp"

namespace magnus {

namespace {

// A parse failure located in a file other than the main problem file.
class SecondaryFileError : public Error {
 public:
  SecondaryFileError(const std::string& file, const ParseError& e)
      : Error(file + ": " + e.what()) {}
};

std::vector<std::vector<std::string>> matrix_strings(const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[r].push_back(m(r, c).to_string());
    }
  }
  return out;
}

std::vector<std::string> poly_strings(const std::vector<NcPoly>& polys,
                                      const Alphabet& alphabet) {
  std::vector<std::string> out;
  for (const NcPoly& p : polys) out.push_back(format_poly(p, alphabet));
  return out;
}

Report check_command(const std::string& file, const std::string& witness_file,
                     bool assume_generation) {
  const Problem problem = parse_problem(file);
  std::optional<GenerationWitness> witness = problem.witness;
  if (!witness_file.empty()) {
    try {
      witness = parse_witness(witness_file, problem);
    } catch (const ParseError& e) {
      throw SecondaryFileError(witness_file, e);
    }
  }

  const Certificate cert =
      certify_freeness(problem.algebra, problem.candidates,
                       witness ? &*witness : nullptr, assume_generation);
  const Alphabet ys = Alphabet::indexed("y", problem.algebra.num_vars);

  Report r;
  r.command = "check";
  r.verdict = std::string(to_string(cert.verdict));
  r.rank = cert.rank;
  r.dimension = cert.dimension;
  r.beta = matrix_strings(cert.beta);
  if (cert.alpha) r.alpha = matrix_strings(*cert.alpha);
  r.phi_candidates = poly_strings(cert.phi_candidates, ys);
  r.phi_relations = poly_strings(cert.phi_relations, ys);
  r.eq3 = cert.eq3;
  r.assumptions = cert.assumptions;
  r.reason = cert.reason;
  switch (cert.verdict) {
    case Verdict::FullFreenessCertified:
    case Verdict::FreeSubalgebraCertified:
      r.exit_code = kExitCertified;
      break;
    case Verdict::Rejected:
      r.exit_code = kExitRejected;
      break;
    case Verdict::Inconclusive:
      r.exit_code = kExitInconclusive;
      break;
  }
  return r;
}

Report member_command(const std::string& file,
                      const std::string& presentation_file) {
  const Problem problem = parse_problem(file);
  const auto system = problem.algebra.relation_system();
  Presentation presentation = [&] {
    try {
      return parse_presentation(presentation_file, problem.variables, system);
    } catch (const ParseError& e) {
      throw SecondaryFileError(presentation_file, e);
    }
  }();

  Report r;
  r.command = "member";
  Alphabet alphabet = problem.variables;
  bool relabeled = false;

  if (!system->normalized()) {
    problem.algebra.validate();
    const LinearParts parts =
        linear_parts_matrix(problem.algebra, problem.candidates);
    const RankCheck check = rank_and_invert(parts.beta);
    r.rank = check.rank;
    r.dimension = check.dimension;
    r.beta = matrix_strings(parts.beta);
    if (!check.passed()) {
      r.verdict = std::string(to_string(Verdict::Rejected));
      r.reason = "relations cannot be normalized: " + check.reason();
      r.exit_code = kExitRejected;
      return r;
    }
    r.alpha = matrix_strings(check.alpha->matrix());
    const std::size_t n = problem.candidates.size();
    const TransformedInstance t =
        build_phi(*check.alpha, problem.algebra, problem.candidates);
    if (!verify_eq3(t)) {
      throw InternalError("L(phi g_j) != y_j after a passing rank check");
    }
    const auto normalized = normalized_system(t, n);
    presentation = transport_presentation(presentation, t, n, normalized);

    // Position p of the rewriting alphabet carries y_i with to[i-1] = p.
    const auto to = normalizing_permutation(n, problem.algebra.num_relations());
    std::vector<std::string> names(to.size());
    for (std::size_t i = 0; i < to.size(); ++i) {
      names[to[i] - 1] = "y" + std::to_string(i + 1);
    }
    alphabet = Alphabet(std::move(names));
    relabeled = true;
  }

  const MinimalMonomialProof proof =
      certify_min_monomial(presentation, RewriteLimits::from_environment());

  MemberReport m;
  m.element = format_poly(evaluate(proof.presentation), alphabet);
  m.min_monomial = format_word(proof.min_monomial, alphabet);
  for (std::size_t j = 1; j <= presentation.system().size(); ++j) {
    m.relation_letters.push_back(alphabet.name(static_cast<Letter>(j)));
  }
  for (const auto& t : proof.presentation.terms()) {
    m.presentation.push_back(format_term(t, alphabet));
  }
  m.steps = proof.steps;
  m.step_bound = proof.step_bound;
  m.relabeled = relabeled;
  for (const Word& tau : proof.tau_trace) {
    r.tau_trace.push_back(format_word(tau, alphabet));
  }
  r.member = std::move(m);
  r.verdict = "MIN_MONOMIAL_CERTIFIED";
  r.exit_code = kExitCertified;
  return r;
}

// Full row rank of the linear parts of g and h forces NONE at every degree.
bool none_predicted(const Problem& problem) {
  const std::size_t rows =
      problem.candidates.size() + problem.algebra.num_relations();
  if (rows > problem.algebra.num_vars) return false;
  return rank(linear_parts_matrix(problem.algebra, problem.candidates).beta) ==
         rows;
}

Report oracle_command(const std::string& file, std::size_t max_degree) {
  const Problem problem = parse_problem(file, ProblemOptions{false});
  const DependencyResult dep = dependency_search_bounded(
      problem.algebra, problem.candidates, max_degree);
  const bool predicted = none_predicted(problem);

  Report r;
  r.command = "oracle";
  OracleReport o;
  o.search = "dependency";
  o.max_degree = max_degree;
  o.predicted_none = predicted;
  if (dep.found()) {
    o.outcome = "FOUND";
    o.phi = format_poly(*dep.phi, problem.slots());
    o.exact = dep.exact;
    if (!dep.exact) {
      o.note = "dependency verified only modulo words of degree > " +
               std::to_string(max_degree);
    }
    r.verdict = "DEPENDENCY_FOUND";
    r.exit_code = kExitRejected;
  } else {
    o.outcome = "NONE";
    o.note = "no dependency of degree <= " + std::to_string(max_degree) +
             "; higher degrees untested";
    if (predicted) {
      r.verdict = "NONE_AS_PREDICTED";
      r.exit_code = kExitCertified;
    } else {
      r.verdict = "INCONCLUSIVE";
      r.exit_code = kExitInconclusive;
    }
  }
  r.oracle = std::move(o);
  return r;
}

Report gen_witness_command(const std::string& file, std::size_t max_degree) {
  const Problem problem = parse_problem(file, ProblemOptions{false});
  const auto witness = generation_search_bounded(
      problem.algebra, problem.candidates, max_degree);

  Report r;
  r.command = "gen-witness";
  OracleReport o;
  o.search = "generation";
  o.max_degree = max_degree;
  if (witness) {
    o.outcome = "FOUND";
    o.exact = true;
    const Alphabet slots = problem.slots();
    for (std::size_t i = 0; i < witness->entries.size(); ++i) {
      const auto& entry = witness->entries[i];
      WitnessReport w;
      w.variable = i + 1;
      w.phi = format_poly(entry->phi, slots);
      for (const auto& t : entry->remainder.terms()) {
        w.remainder.push_back(format_term(t, problem.variables));
      }
      o.witness.push_back(std::move(w));
    }
    r.verdict = "WITNESS_FOUND";
    r.exit_code = kExitCertified;
  } else {
    o.outcome = "NONE";
    o.note = "no exactly verifiable witness of degree <= " +
             std::to_string(max_degree);
    r.verdict = "INCONCLUSIVE";
    r.exit_code = kExitInconclusive;
  }
  r.oracle = std::move(o);
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Certify candidate generator systems of finitely presented non-unital "
      "algebras as free."};
  app.require_subcommand(1);

  std::string file;
  std::string witness_file;
  std::string presentation_file;
  bool assume_generation = false;
  bool json_output = false;
  std::size_t max_degree = 0;

  auto* check = app.add_subcommand("check", "Run the freeness certifier");
  check->add_option("FILE", file, "Problem file")->required();
  check->add_flag("--assume-generation", assume_generation,
                  "Take generation of A by the candidates as given");
  check->add_option("--witness", witness_file, "File with 'wit' lines");
  check->add_flag("--json", json_output, "Emit the JSON report");

  auto* member = app.add_subcommand(
      "member", "Raise a presentation's parameter to its minimal monomial");
  member->add_option("FILE", file, "Problem file")->required();
  member->add_option("--presentation", presentation_file, "Presentation file")
      ->required();
  member->add_flag("--json", json_output, "Emit the JSON report");

  auto* oracle = app.add_subcommand(
      "oracle", "Search for a dependency of bounded degree");
  oracle->add_option("FILE", file, "Problem file")->required();
  oracle->add_option("--max-degree", max_degree, "Degree bound D")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--json", json_output, "Emit the JSON report");

  auto* gen = app.add_subcommand(
      "gen-witness", "Search for a generation witness of bounded degree");
  gen->add_option("FILE", file, "Problem file")->required();
  gen->add_option("--max-degree", max_degree, "Degree bound D")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_flag("--json", json_output, "Emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitCertified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (check->parsed()) {
      report = check_command(file, witness_file, assume_generation);
    } else if (member->parsed()) {
      report = member_command(file, presentation_file);
    } else if (oracle->parsed()) {
      report = oracle_command(file, max_degree);
    } else {
      report = gen_witness_command(file, max_degree);
    }
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ParseError& e) {
    err << file << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const SecondaryFileError& e) {
    err << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report.timings["total_ms"] =
      std::chrono::duration<double, std::milli>(elapsed).count();

  if (json_output) {
    out << nlohmann::json(report).dump(2) << '\n';
  } else {
    out << render_text(report);
  }
  return report.exit_code;
}

}  // namespace magnus
