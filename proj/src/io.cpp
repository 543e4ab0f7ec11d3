#include "magnus/io.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "magnus/errors.hpp"

namespace magnus {

// ----------------------------------------------------------------- Alphabet

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) {
      return false;
    }
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string_view> seen;
  for (const auto& name : names_) {
    if (!is_identifier(name)) {
      throw DomainError("'" + name + "' is not a valid variable name");
    }
    if (name == "e") {
      throw DomainError("'e' is reserved for the empty word");
    }
    if (!seen.insert(name).second) {
      throw DomainError("duplicate variable name '" + name + "'");
    }
  }
}

Alphabet Alphabet::indexed(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Letter>(i + 1);
  }
  return std::nullopt;
}

// --------------------------------------------------------------- formatting

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += '*';
    out += alphabet.name(w[i]);
  }
  return out;
}

std::string format_poly(const NcPoly& p, const Alphabet& alphabet) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, c] : p.terms()) {
    const bool negative = c.is_negative();
    const Scalar magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    out += format_word(word, alphabet);
    first = false;
  }
  return out;
}

std::string format_term(const PresentationTerm& t, const Alphabet& alphabet) {
  return t.coefficient.to_string() + " ; " + format_word(t.left, alphabet) +
         " ; " + std::to_string(t.relation) + " ; " +
         format_word(t.right, alphabet);
}

std::ostream& operator<<(std::ostream& os, const NcPoly& p) {
  return os << format_poly(p, Alphabet::indexed("x", p.num_vars()));
}

// ------------------------------------------------------------------ parsing

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t column_offset)
      : text_(text), line_(line), offset_(column_offset) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t position() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& message) const {
    fail_at(pos_, message);
  }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, offset_ + pos + 1, message);
  }

  bool at_digit() const {
    return std::isdigit(static_cast<unsigned char>(peek())) != 0;
  }
  bool at_identifier() const {
    const char ch = peek();
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
  }

  mpz_class integer() {
    if (!at_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view identifier() {
    if (!at_identifier()) fail("expected a variable");
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view text) {
  const auto hash = text.find('#');
  return hash == std::string_view::npos ? text : text.substr(0, hash);
}

// int ['/' int], already past any sign.
Scalar parse_magnitude(Cursor& c, Field field) {
  const std::size_t start = c.position();
  mpz_class num = c.integer();
  mpz_class den = 1;
  c.skip_ws();
  if (c.accept('/')) {
    c.skip_ws();
    den = c.integer();
  }
  try {
    return Scalar::fraction(field, num, den);
  } catch (const DomainError& e) {
    c.fail_at(start, e.what());
  }
}

Word parse_factors(Cursor& c, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  while (true) {
    c.skip_ws();
    const std::size_t start = c.position();
    if (!c.at_identifier()) c.fail("expected a variable");
    const std::string_view name = c.identifier();
    const auto letter = alphabet.find(name);
    if (!letter) c.fail_at(start, "unknown variable '" + std::string(name) + "'");
    std::size_t repeat = 1;
    c.skip_ws();
    if (c.accept('^')) {
      c.skip_ws();
      const std::size_t at = c.position();
      const mpz_class e = c.integer();
      if (e < 1 || e > 1000) c.fail_at(at, "exponent must be in 1..1000");
      repeat = e.get_ui();
      c.skip_ws();
    }
    letters.insert(letters.end(), repeat, *letter);
    if (!c.accept('*')) break;
  }
  return Word(std::move(letters));
}

}  // namespace

NcPoly parse_poly(std::string_view text, const Alphabet& alphabet, Field field,
                  std::size_t line, std::size_t column_offset) {
  text = strip_comment(text);
  Cursor c(text, line, column_offset);
  NcPoly out(field, alphabet.size());
  c.skip_ws();
  if (c.at_end()) c.fail("empty polynomial");

  bool first = true;
  while (true) {
    c.skip_ws();
    bool negative = false;
    if (first) {
      if (c.accept('-')) {
        negative = true;
      } else {
        c.accept('+');
      }
    } else {
      if (c.at_end()) break;
      if (c.accept('-')) {
        negative = true;
      } else if (!c.accept('+')) {
        c.fail("expected '+', '-' or end of input");
      }
    }
    c.skip_ws();
    const std::size_t term_start = c.position();
    Scalar coeff = Scalar::one(field);
    Word word;
    if (c.at_digit()) {
      coeff = parse_magnitude(c, field);
      c.skip_ws();
      if (c.accept('*')) {
        word = parse_factors(c, alphabet);
      } else if (!coeff.is_zero()) {
        c.fail_at(term_start, "constant term not allowed");
      }
    } else if (c.at_identifier()) {
      word = parse_factors(c, alphabet);
    } else {
      c.fail("expected a coefficient or a variable");
    }
    if (!word.empty()) out.add_term(word, negative ? -coeff : coeff);
    first = false;
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet,
                std::size_t line, std::size_t column_offset) {
  Cursor c(text, line, column_offset);
  c.skip_ws();
  if (c.at_end()) c.fail("expected a word or 'e'");
  Word w;
  const std::size_t start = c.position();
  const bool empty_word = c.at_identifier() && c.identifier() == "e";
  if (!empty_word) {
    c.reset(start);
    w = parse_factors(c, alphabet);
  }
  c.skip_ws();
  if (!c.at_end()) c.fail("unexpected text after word");
  return w;
}

namespace {

struct Field_ {
  std::string_view text;
  std::size_t column;  // 0-based column of text.front() in its line
};

std::vector<Field_> split_fields(std::string_view text, std::size_t column) {
  std::vector<Field_> out;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    const auto end = semi == std::string_view::npos ? text.size() : semi;
    out.push_back(Field_{text.substr(start, end - start), column + start});
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

Scalar parse_coefficient_field(const Field_& f, Field field, std::size_t line) {
  Cursor c(f.text, line, f.column);
  c.skip_ws();
  bool negative = false;
  if (c.accept('-')) {
    negative = true;
  } else {
    c.accept('+');
  }
  c.skip_ws();
  const std::size_t start = c.position();
  Scalar s = parse_magnitude(c, field);
  c.skip_ws();
  if (!c.at_end()) c.fail("unexpected text after coefficient");
  if (s.is_zero()) c.fail_at(start, "zero coefficient");
  return negative ? -s : s;
}

std::size_t parse_index_field(const Field_& f, std::size_t line,
                              std::size_t limit, const char* what) {
  Cursor c(f.text, line, f.column);
  c.skip_ws();
  const std::size_t start = c.position();
  const mpz_class v = c.integer();
  c.skip_ws();
  if (!c.at_end()) c.fail("unexpected text after " + std::string(what));
  if (v < 1 || v > limit) {
    c.fail_at(start, std::string(what) + " " + v.get_str() +
                         " out of range 1.." + std::to_string(limit));
  }
  return v.get_ui();
}

void parse_terms(const std::vector<Field_>& fields, std::size_t first,
                 std::size_t line, const Alphabet& alphabet,
                 Presentation& out) {
  const RelationSystem& sys = out.system();
  for (std::size_t f = first; f + 4 <= fields.size(); f += 4) {
    const Scalar c = parse_coefficient_field(fields[f], sys.field(), line);
    const Word p = parse_word(fields[f + 1].text, alphabet, line,
                              fields[f + 1].column);
    const std::size_t j =
        parse_index_field(fields[f + 2], line, sys.size(), "relation index");
    const Word q = parse_word(fields[f + 3].text, alphabet, line,
                              fields[f + 3].column);
    out.add(c, p, j, q);
  }
}

struct PendingWitness {
  std::size_t line;
  std::string text;  // whole line after the keyword
  std::size_t column;
};

void parse_witness_line(const PendingWitness& pending, const Problem& problem,
                        const std::shared_ptr<const RelationSystem>& system,
                        GenerationWitness& witness,
                        std::vector<bool>& seen) {
  const std::string_view text = pending.text;
  const auto colon = text.find(':');
  Cursor head(text.substr(0, colon), pending.line, pending.column);
  head.skip_ws();
  const std::size_t at = head.position();
  if (colon == std::string_view::npos) head.fail("expected 'wit <i> : ...'");
  const mpz_class idx = head.integer();
  head.skip_ws();
  if (!head.at_end()) head.fail("expected ':' after the variable index");
  const std::size_t nvars = problem.algebra.num_vars;
  if (idx < 1 || idx > nvars) {
    head.fail_at(at, "witness index " + idx.get_str() + " out of range 1.." +
                         std::to_string(nvars));
  }
  const std::size_t i = idx.get_ui();
  if (seen[i - 1]) head.fail_at(at, "duplicate witness for variable " +
                                        std::to_string(i));
  seen[i - 1] = true;

  const auto fields =
      split_fields(text.substr(colon + 1), pending.column + colon + 1);
  const std::size_t rest = fields.size() - 1;
  // A trailing ';' with nothing after it is allowed.
  const bool trailing_empty =
      rest == 1 && fields[1].text.find_first_not_of(" \t\r") ==
                       std::string_view::npos;
  if (rest % 4 != 0 && !trailing_empty) {
    throw ParseError(pending.line, fields.back().column + 1,
                     "presentation terms need 4 fields "
                     "'<coeff> ; <p> ; <relation> ; <q>'");
  }
  const Alphabet slots = problem.slots();
  NcPoly phi = parse_poly(fields[0].text, slots, problem.algebra.field,
                          pending.line, fields[0].column);
  Presentation remainder(system);
  if (!trailing_empty) {
    parse_terms(fields, 1, pending.line, problem.variables, remainder);
  }
  witness.entries[i - 1] = WitnessEntry{std::move(phi), std::move(remainder)};
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(Line{number++, line});
    start = nl + 1;
  }
  return out;
}

// Keyword and the column just past it; empty keyword for blank lines.
std::pair<std::string_view, std::size_t> keyword_of(std::string_view line) {
  std::size_t pos = 0;
  while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
    ++pos;
  }
  const std::size_t start = pos;
  while (pos < line.size() && std::isalpha(static_cast<unsigned char>(line[pos]))) {
    ++pos;
  }
  return {line.substr(start, pos - start), pos};
}

GenerationWitness collect_witness(const std::vector<PendingWitness>& pending,
                                  const Problem& problem) {
  GenerationWitness witness;
  witness.entries.resize(problem.algebra.num_vars);
  std::vector<bool> seen(problem.algebra.num_vars, false);
  const auto system = problem.algebra.relation_system();
  for (const auto& p : pending) {
    parse_witness_line(p, problem, system, witness, seen);
  }
  return witness;
}

}  // namespace

Problem parse_problem_text(std::string_view text,
                           const ProblemOptions& options) {
  Problem problem;
  std::optional<std::size_t> field_line;
  std::optional<std::size_t> vars_line;
  std::vector<PendingWitness> pending;
  std::size_t last_line = 1;

  for (const Line& line : split_lines(text)) {
    const std::string_view content = strip_comment(line.text);
    const auto [keyword, after] = keyword_of(content);
    last_line = line.number;
    if (keyword.empty()) {
      if (content.find_first_not_of(" \t") != std::string_view::npos) {
        throw ParseError(line.number, after + 1, "expected a keyword");
      }
      continue;
    }
    const std::string_view rest = content.substr(after);
    Cursor c(rest, line.number, after);

    if (keyword == "field") {
      if (field_line) {
        throw ParseError(line.number, 1, "duplicate 'field' section");
      }
      field_line = line.number;
      c.skip_ws();
      const std::size_t start = c.position();
      const std::string_view name = c.identifier();
      if (name == "Q") {
        problem.algebra.field = Field::rationals();
      } else if (name == "GF") {
        c.skip_ws();
        if (!c.accept('(')) c.fail("expected '(' after GF");
        c.skip_ws();
        const std::size_t at = c.position();
        const mpz_class p = c.integer();
        c.skip_ws();
        if (!c.accept(')')) c.fail("expected ')'");
        try {
          if (!p.fits_uint_p()) throw DomainError("modulus too large");
          problem.algebra.field = Field::prime(static_cast<std::uint32_t>(p.get_ui()));
        } catch (const DomainError& e) {
          c.fail_at(at, e.what());
        }
      } else {
        c.fail_at(start, "unknown field '" + std::string(name) +
                             "', expected Q or GF(p)");
      }
      c.skip_ws();
      if (!c.at_end()) c.fail("unexpected text after field");
    } else if (keyword == "vars") {
      if (vars_line) throw ParseError(line.number, 1, "duplicate 'vars' section");
      vars_line = line.number;
      std::vector<std::string> names;
      while (true) {
        c.skip_ws();
        if (c.at_end()) break;
        const std::size_t start = c.position();
        if (!c.at_identifier()) c.fail("expected a variable name");
        const std::string name(c.identifier());
        if (!c.at_end() && !std::isspace(static_cast<unsigned char>(c.peek()))) {
          c.fail("unexpected character in variable name");
        }
        for (const auto& seen : names) {
          if (seen == name) c.fail_at(start, "duplicate variable name '" + name + "'");
        }
        if (name == "e") c.fail_at(start, "'e' is reserved for the empty word");
        names.push_back(name);
      }
      if (names.empty()) c.fail("expected at least one variable");
      problem.variables = Alphabet(std::move(names));
      problem.algebra.num_vars = problem.variables.size();
    } else if (keyword == "rel" || keyword == "gen") {
      if (!field_line) {
        throw ParseError(line.number, 1, "'field' must be declared first");
      }
      if (!vars_line) {
        throw ParseError(line.number, 1, "'vars' must be declared first");
      }
      NcPoly p = parse_poly(rest, problem.variables, problem.algebra.field,
                            line.number, after);
      if (p.is_zero()) {
        throw ParseError(line.number, after + 1,
                         std::string(keyword == "rel" ? "relation" : "candidate") +
                             " must be nonzero");
      }
      if (keyword == "rel") {
        problem.algebra.relations.push_back(std::move(p));
      } else {
        problem.candidates.generators.push_back(std::move(p));
      }
    } else if (keyword == "wit") {
      pending.push_back(PendingWitness{line.number, std::string(rest), after});
    } else {
      throw ParseError(line.number, after - keyword.size() + 1,
                       "unknown keyword '" + std::string(keyword) + "'");
    }
  }

  if (!field_line) throw ParseError(last_line, 1, "missing 'field' declaration");
  if (!vars_line) throw ParseError(last_line, 1, "missing 'vars' declaration");

  const std::size_t n = problem.candidates.size();
  const std::size_t k = problem.algebra.relations.size();
  if (options.require_counts && n + k != problem.algebra.num_vars) {
    throw ParseError(*vars_line, 1,
                     "n + k = " + std::to_string(n + k) + " ≠ " +
                         std::to_string(problem.algebra.num_vars) +
                         " variables");
  }
  if (!pending.empty()) problem.witness = collect_witness(pending, problem);
  return problem;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Problem parse_problem(const std::filesystem::path& path,
                      const ProblemOptions& options) {
  return parse_problem_text(read_file(path), options);
}

GenerationWitness parse_witness_text(std::string_view text,
                                     const Problem& problem) {
  std::vector<PendingWitness> pending;
  for (const Line& line : split_lines(text)) {
    const std::string_view content = strip_comment(line.text);
    const auto [keyword, after] = keyword_of(content);
    if (keyword.empty()) {
      if (content.find_first_not_of(" \t") != std::string_view::npos) {
        throw ParseError(line.number, after + 1, "expected 'wit'");
      }
      continue;
    }
    if (keyword != "wit") {
      throw ParseError(line.number, after - keyword.size() + 1,
                       "expected 'wit', got '" + std::string(keyword) + "'");
    }
    pending.push_back(PendingWitness{line.number,
                                     std::string(content.substr(after)), after});
  }
  return collect_witness(pending, problem);
}

GenerationWitness parse_witness(const std::filesystem::path& path,
                                const Problem& problem) {
  return parse_witness_text(read_file(path), problem);
}

Presentation parse_presentation_text(
    std::string_view text, const Alphabet& alphabet,
    std::shared_ptr<const RelationSystem> system) {
  Presentation out(std::move(system));
  for (const Line& line : split_lines(text)) {
    const std::string_view content = strip_comment(line.text);
    if (content.find_first_not_of(" \t") == std::string_view::npos) continue;
    const auto fields = split_fields(content, 0);
    if (fields.size() != 4) {
      throw ParseError(line.number, 1,
                       "expected 4 fields '<coeff> ; <p> ; <relation> ; <q>'");
    }
    parse_terms(fields, 0, line.number, alphabet, out);
  }
  return out;
}

Presentation parse_presentation(const std::filesystem::path& path,
                                const Alphabet& alphabet,
                                std::shared_ptr<const RelationSystem> system) {
  return parse_presentation_text(read_file(path), alphabet, std::move(system));
}

}  // namespace magnus
