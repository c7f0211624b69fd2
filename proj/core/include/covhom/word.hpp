#ifndef COVHOM_WORD_HPP
#define COVHOM_WORD_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace covhom {

/// A letter is a nonzero signed generator index: +i encodes x_i, -i encodes
/// x_i^{-1}. Generators are 1-indexed.
using Letter = std::int32_t;

/// Freely reduced word in a free group. Reduction happens eagerly on
/// construction; every Word in the library is in normal form.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Largest generator index mentioned; 0 for the empty word.
  int max_generator() const;

  Word inverse() const;
  Word operator*(const Word& rhs) const;

  /// x_i as a one-letter word (sign = -1 for the inverse).
  static Word generator(int index, int sign = 1);
  /// aba^{-1}b^{-1}
  static Word commutator(const Word& a, const Word& b);
  /// a w a^{-1}
  static Word conjugate(const Word& conjugator, const Word& w);
  Word pow(long exponent) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Reduces a raw letter sequence, validating indices against `rank`.
/// Throws index_out_of_range if a letter mentions a generator above rank
/// (or the letter 0, which encodes nothing).
Word free_reduce(std::span<const Letter> letters, int rank);

/// Text syntax: generators x1..xn, inverses X1..Xn, tokens separated by
/// whitespace or concatenated ("x1 x2 X1" == "x1x2X1").
Word parse_word(const std::string& text, int rank);
std::string format_word(const Word& w);

/// Exponent sum of each generator, indices 1..rank.
std::vector<long> abelianize_word(const Word& w, int rank);

}  // namespace covhom

#endif
