#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "magnus/scalar.hpp"
#include "magnus/word.hpp"

namespace magnus {

/// Element of the non-unital free associative algebra over `field` in
/// variables 1..num_vars. Terms are stored in deg-lex order with no zero
/// coefficients and no empty word, so structural and mathematical equality
/// coincide.
class NcPoly {
 public:
  using TermMap = std::map<Word, Scalar>;

  NcPoly() = default;
  NcPoly(Field field, std::size_t num_vars)
      : field_(field), num_vars_(num_vars) {}

  static NcPoly variable(Field field, std::size_t num_vars, Letter x);
  static NcPoly monomial(Field field, std::size_t num_vars, Word word,
                         Scalar coefficient);

  Field field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Zero if `word` does not occur.
  Scalar coefficient(const Word& word) const;
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  /// Adds c*word in place. Throws DomainError on the empty word or a letter
  /// outside 1..num_vars, FieldMismatch on a foreign coefficient.
  void add_term(const Word& word, const Scalar& c);

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& other);
  NcPoly& operator-=(const NcPoly& other);
  NcPoly& operator*=(const Scalar& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }

  /// Throws FieldMismatch on incompatible operands.
  friend bool operator==(const NcPoly& a, const NcPoly& b);

  /// Same polynomial read over a different (at least as large) alphabet.
  NcPoly with_num_vars(std::size_t num_vars) const;

 private:
  void check_compatible(const NcPoly& other) const;

  Field field_;
  std::size_t num_vars_ = 0;
  TermMap terms_;
};

NcPoly poly_add(const NcPoly& a, const NcPoly& b);
NcPoly poly_mul(const NcPoly& a, const NcPoly& b);
NcPoly poly_scale(const Scalar& c, const NcPoly& a);

/// Product with every word of degree > max_degree discarded.
NcPoly multiply_truncated(const NcPoly& a, const NcPoly& b,
                          std::size_t max_degree);
NcPoly truncate(const NcPoly& p, std::size_t max_degree);

/// Homogeneous component of degree 1.
NcPoly linear_part(const NcPoly& p);
NcPoly homogeneous_part(const NcPoly& p, std::size_t degree);

/// m(p): deg-lex least word with nonzero coefficient. DomainError on 0.
const Word& min_monomial(const NcPoly& p);

/// Sum of the terms of lowest degree. DomainError on 0.
NcPoly min_homogeneous_part(const NcPoly& p);

/// Image of `phi` (over slot variables z1..zn) under the non-unital
/// homomorphism z_i -> args[i-1]. Throws DomainError when phi.num_vars()
/// differs from args.size(), FieldMismatch on mixed fields or alphabets.
NcPoly substitute(const NcPoly& phi, std::span<const NcPoly> args);

/// As substitute(), discarding words of degree > max_degree along the way.
NcPoly substitute_truncated(const NcPoly& phi, std::span<const NcPoly> args,
                            std::size_t max_degree);

/// Renames variable i to new_index[i-1]; target alphabet has `num_vars`
/// letters.
NcPoly permute_variables(const NcPoly& p, std::span<const Letter> new_index,
                         std::size_t num_vars);
Word permute_word(const Word& w, std::span<const Letter> new_index);

std::ostream& operator<<(std::ostream& os, const NcPoly& p);

}  // namespace magnus
