#include "covhom/word.hpp"

#include <cctype>
#include <cstdlib>

#include "covhom/error.hpp"

namespace covhom {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

int Word::max_generator() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, std::abs(l));
  return m;
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
  return r;
}

Word Word::operator*(const Word& rhs) const {
  Word r = *this;
  for (Letter l : rhs.letters_) push_reduced(r.letters_, l);
  return r;
}

Word Word::generator(int index, int sign) {
  Word r;
  r.letters_.push_back(sign >= 0 ? index : -index);
  return r;
}

Word Word::commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word Word::conjugate(const Word& conjugator, const Word& w) {
  return conjugator * w * conjugator.inverse();
}

Word Word::pow(long exponent) const {
  Word base = exponent >= 0 ? *this : inverse();
  long n = exponent >= 0 ? exponent : -exponent;
  Word r;
  for (long i = 0; i < n; ++i) r = r * base;
  return r;
}

Word free_reduce(std::span<const Letter> letters, int rank) {
  for (Letter l : letters) {
    if (l == 0 || std::abs(l) > rank)
      fail(errc::index_out_of_range,
           "letter " + std::to_string(l) + " outside rank " + std::to_string(rank));
  }
  return Word(letters);
}

Word parse_word(const std::string& text, int rank) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int sign;
    if (c == 'x')
      sign = 1;
    else if (c == 'X')
      sign = -1;
    else
      fail(errc::parse_error, "unexpected character '" + std::string(1, c) + "' in word");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail(errc::parse_error, "generator letter without index in word");
    int index = std::atoi(text.substr(start, i - start).c_str());
    if (index < 1 || index > rank)
      fail(errc::index_out_of_range,
           "generator x" + std::to_string(index) + " outside rank " + std::to_string(rank));
    letters.push_back(sign * index);
  }
  return Word(letters);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += (l > 0 ? 'x' : 'X');
    out += std::to_string(std::abs(l));
  }
  return out;
}

std::vector<long> abelianize_word(const Word& w, int rank) {
  std::vector<long> e(static_cast<std::size_t>(rank) + 1, 0);
  for (Letter l : w.letters()) e[static_cast<std::size_t>(std::abs(l))] += (l > 0 ? 1 : -1);
  return e;
}

}  // namespace covhom
