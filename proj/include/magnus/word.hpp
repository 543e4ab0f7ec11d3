#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace magnus {

/// 1-based variable index.
using Letter = std::uint32_t;

/// A monomial of the free monoid: a finite sequence of variable indices.
/// Ordered degree-lexicographically (shorter first, then left to right).
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word letter(Letter x) { return Word{x}; }

  std::size_t degree() const noexcept { return letters_.size(); }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Largest letter occurring, 0 for the empty word.
  Letter max_letter() const noexcept;
  bool contains_letter_at_most(Letter bound) const noexcept;

  /// Letters [from, from + count).
  Word subword(std::size_t from, std::size_t count) const;
  Word subword(std::size_t from) const { return subword(from, size() - from); }

  Word& operator*=(const Word& tail);
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Degree-lexicographic comparison.
inline std::strong_ordering deglex_cmp(const Word& a, const Word& b) {
  return a <=> b;
}

/// Number of nonempty words of degree at most `degree` over `nvars` letters,
/// saturating at SIZE_MAX.
std::size_t word_count_up_to(std::size_t nvars, std::size_t degree);

/// All words of exactly `degree` letters over 1..nvars, in deg-lex order.
std::vector<Word> words_of_degree(std::size_t nvars, std::size_t degree);

}  // namespace magnus
