#include "magnus/poly.hpp"

#include <string>

#include "magnus/errors.hpp"

namespace magnus {

namespace {

void accumulate(NcPoly::TermMap& terms, Word word, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(std::move(word), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

NcPoly NcPoly::variable(Field field, std::size_t num_vars, Letter x) {
  return monomial(field, num_vars, Word{x}, Scalar::one(field));
}

NcPoly NcPoly::monomial(Field field, std::size_t num_vars, Word word,
                        Scalar coefficient) {
  NcPoly p(field, num_vars);
  p.add_term(word, coefficient);
  return p;
}

Scalar NcPoly::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::size_t NcPoly::min_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::size_t NcPoly::max_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void NcPoly::add_term(const Word& word, const Scalar& c) {
  if (word.empty()) {
    throw DomainError("constant term not allowed in a non-unital algebra");
  }
  for (Letter x : word) {
    if (x < 1 || x > num_vars_) {
      throw DomainError("variable index " + std::to_string(x) +
                        " outside alphabet of size " +
                        std::to_string(num_vars_));
    }
  }
  if (c.field() != field_) {
    throw FieldMismatch("coefficient over " + c.field().name() +
                        " added to polynomial over " + field_.name());
  }
  accumulate(terms_, word, c);
}

void NcPoly::check_compatible(const NcPoly& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("polynomial field mismatch: " + field_.name() +
                        " vs " + other.field_.name());
  }
  if (num_vars_ != other.num_vars_) {
    throw FieldMismatch("polynomial alphabet mismatch: " +
                        std::to_string(num_vars_) + " vs " +
                        std::to_string(other.num_vars_) + " variables");
  }
}

NcPoly NcPoly::operator-() const {
  NcPoly out = *this;
  for (auto& [word, c] : out.terms_) c = -c;
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& other) {
  check_compatible(other);
  for (const auto& [word, c] : other.terms_) accumulate(terms_, word, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) {
  check_compatible(other);
  for (const auto& [word, c] : other.terms_) accumulate(terms_, word, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
  if (c.field() != field_) {
    throw FieldMismatch("scalar over " + c.field().name() +
                        " times polynomial over " + field_.name());
  }
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [word, coeff] : terms_) coeff *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  return multiply_truncated(a, b, static_cast<std::size_t>(-1));
}

bool operator==(const NcPoly& a, const NcPoly& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

NcPoly NcPoly::with_num_vars(std::size_t num_vars) const {
  NcPoly out(field_, num_vars);
  for (const auto& [word, c] : terms_) out.add_term(word, c);
  return out;
}

NcPoly poly_add(const NcPoly& a, const NcPoly& b) { return a + b; }
NcPoly poly_mul(const NcPoly& a, const NcPoly& b) { return a * b; }
NcPoly poly_scale(const Scalar& c, const NcPoly& a) { return c * a; }

NcPoly multiply_truncated(const NcPoly& a, const NcPoly& b,
                          std::size_t max_degree) {
  if (a.field() != b.field() || a.num_vars() != b.num_vars()) {
    throw FieldMismatch("cannot multiply polynomials over different fields "
                        "or alphabets");
  }
  NcPoly out(a.field(), a.num_vars());
  NcPoly::TermMap terms;
  for (const auto& [wa, ca] : a.terms()) {
    if (wa.degree() + b.min_degree() > max_degree) break;
    for (const auto& [wb, cb] : b.terms()) {
      if (wa.degree() + wb.degree() > max_degree) break;
      accumulate(terms, wa * wb, ca * cb);
    }
  }
  for (auto& [word, c] : terms) out.add_term(word, c);
  return out;
}

NcPoly truncate(const NcPoly& p, std::size_t max_degree) {
  NcPoly out(p.field(), p.num_vars());
  for (const auto& [word, c] : p.terms()) {
    if (word.degree() > max_degree) break;
    out.add_term(word, c);
  }
  return out;
}

NcPoly homogeneous_part(const NcPoly& p, std::size_t degree) {
  NcPoly out(p.field(), p.num_vars());
  for (const auto& [word, c] : p.terms()) {
    if (word.degree() > degree) break;
    if (word.degree() == degree) out.add_term(word, c);
  }
  return out;
}

NcPoly linear_part(const NcPoly& p) { return homogeneous_part(p, 1); }

const Word& min_monomial(const NcPoly& p) {
  if (p.is_zero()) throw DomainError("m undefined for 0");
  return p.terms().begin()->first;
}

NcPoly min_homogeneous_part(const NcPoly& p) {
  if (p.is_zero()) throw DomainError("minimal homogeneous part undefined for 0");
  return homogeneous_part(p, p.min_degree());
}

NcPoly substitute_truncated(const NcPoly& phi, std::span<const NcPoly> args,
                            std::size_t max_degree) {
  if (phi.num_vars() != args.size()) {
    throw DomainError("substitute: polynomial has " +
                      std::to_string(phi.num_vars()) + " slots but " +
                      std::to_string(args.size()) + " arguments were given");
  }
  if (args.empty()) {
    throw DomainError("substitute: at least one argument is required");
  }
  const Field field = args.front().field();
  const std::size_t nvars = args.front().num_vars();
  for (const NcPoly& a : args) {
    if (a.field() != field || a.num_vars() != nvars) {
      throw FieldMismatch("substitute: arguments disagree on field or alphabet");
    }
  }
  if (phi.field() != field) {
    throw FieldMismatch("substitute: slot polynomial over " +
                        phi.field().name() + ", arguments over " +
                        field.name());
  }

  // Products of prefixes are shared between the words of phi.
  std::map<Word, NcPoly> prefix_products;
  auto product_of = [&](const Word& w) -> const NcPoly& {
    std::size_t known = 0;
    for (std::size_t len = w.size(); len > 0; --len) {
      if (prefix_products.count(w.subword(0, len))) {
        known = len;
        break;
      }
    }
    NcPoly current = known == 0 ? args[w[0] - 1]
                                : prefix_products.at(w.subword(0, known));
    if (known == 0) {
      known = 1;
      prefix_products.emplace(w.subword(0, 1), current);
    }
    for (std::size_t len = known + 1; len <= w.size(); ++len) {
      current = multiply_truncated(current, args[w[len - 1] - 1], max_degree);
      prefix_products.emplace(w.subword(0, len), current);
    }
    return prefix_products.at(w);
  };

  NcPoly out(field, nvars);
  for (const auto& [word, c] : phi.terms()) {
    out += c * product_of(word);
  }
  return out;
}

NcPoly substitute(const NcPoly& phi, std::span<const NcPoly> args) {
  return substitute_truncated(phi, args, static_cast<std::size_t>(-1));
}

Word permute_word(const Word& w, std::span<const Letter> new_index) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Letter x : w) letters.push_back(new_index[x - 1]);
  return Word(std::move(letters));
}

NcPoly permute_variables(const NcPoly& p, std::span<const Letter> new_index,
                         std::size_t num_vars) {
  NcPoly out(p.field(), num_vars);
  for (const auto& [word, c] : p.terms()) {
    out.add_term(permute_word(word, new_index), c);
  }
  return out;
}

}  // namespace magnus
