#include "magnus/word.hpp"

#include <algorithm>
#include <limits>

namespace magnus {

Letter Word::max_letter() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

bool Word::contains_letter_at_most(Letter bound) const noexcept {
  return std::any_of(letters_.begin(), letters_.end(),
                     [bound](Letter x) { return x <= bound; });
}

Word Word::subword(std::size_t from, std::size_t count) const {
  return Word(std::vector<Letter>(letters_.begin() + from,
                                  letters_.begin() + from + count));
}

Word& Word::operator*=(const Word& tail) {
  letters_.insert(letters_.end(), tail.letters_.begin(), tail.letters_.end());
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

std::size_t word_count_up_to(std::size_t nvars, std::size_t degree) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t d = 1; d <= degree; ++d) {
    if (nvars != 0 && layer > kMax / nvars) return kMax;
    layer *= nvars;
    if (total > kMax - layer) return kMax;
    total += layer;
  }
  return total;
}

std::vector<Word> words_of_degree(std::size_t nvars, std::size_t degree) {
  std::vector<Word> out;
  if (nvars == 0 && degree > 0) return out;
  std::vector<Letter> current(degree, 1);
  while (true) {
    out.emplace_back(current);
    std::size_t pos = degree;
    while (pos > 0 && current[pos - 1] == nvars) {
      current[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) break;
    ++current[pos - 1];
  }
  return out;
}

}  // namespace magnus
