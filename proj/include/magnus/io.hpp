#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magnus/certifier.hpp"
#include "magnus/poly.hpp"
#include "magnus/presentation.hpp"

namespace magnus {

/// Variable names; position i-1 names letter i.
class Alphabet {
 public:
  Alphabet() = default;
  /// Names must be distinct identifiers other than "e" (the empty word).
  explicit Alphabet(std::vector<std::string> names);

  static Alphabet indexed(std::string_view prefix, std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter x) const { return names_.at(x - 1); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Letter> find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

/// "x1*x3", or "e" for the empty word.
std::string format_word(const Word& w, const Alphabet& alphabet);
/// Terms in deg-lex order, e.g. "x2 - x1*x1" or "3/2*x1*x3"; "0" for zero.
std::string format_poly(const NcPoly& p, const Alphabet& alphabet);
/// "c ; p ; j ; q".
std::string format_term(const PresentationTerm& t, const Alphabet& alphabet);

/// poly := ['+'|'-'] term (('+'|'-') term)*
/// term := coeff ['*' word] | word,  coeff := int ['/' int]
/// word := factor ('*' factor)*,     factor := var ['^' int]
/// '#' starts a comment. Errors carry `line` and columns shifted by
/// `column_offset`.
NcPoly parse_poly(std::string_view text, const Alphabet& alphabet, Field field,
                  std::size_t line = 1, std::size_t column_offset = 0);

/// A word "x1*x3^2", or "e" for the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet,
                std::size_t line = 1, std::size_t column_offset = 0);

struct Problem {
  Alphabet variables;
  AlgebraPresentation algebra;
  CandidateSystem candidates;
  std::optional<GenerationWitness> witness;

  Alphabet slots() const { return Alphabet::indexed("z", candidates.size()); }
};

struct ProblemOptions {
  /// Enforce N = n + k. The oracle commands accept any candidate count.
  bool require_counts = true;
};

/// Lines: `field Q` or `field GF(p)`; `vars x1 x2 ...`; `rel <poly>`;
/// `gen <poly>`; `wit i : <poly in z1..zn> [; c ; p ; j ; q]...`.
Problem parse_problem_text(std::string_view text,
                           const ProblemOptions& options = {});
Problem parse_problem(const std::filesystem::path& path,
                      const ProblemOptions& options = {});

/// `wit` lines only, checked against an already parsed problem.
GenerationWitness parse_witness_text(std::string_view text,
                                     const Problem& problem);
GenerationWitness parse_witness(const std::filesystem::path& path,
                                const Problem& problem);

/// One term per line: `<coeff> ; <p or e> ; <relation index> ; <q or e>`.
Presentation parse_presentation_text(
    std::string_view text, const Alphabet& alphabet,
    std::shared_ptr<const RelationSystem> system);
Presentation parse_presentation(const std::filesystem::path& path,
                                const Alphabet& alphabet,
                                std::shared_ptr<const RelationSystem> system);

std::string read_file(const std::filesystem::path& path);

}  // namespace magnus
