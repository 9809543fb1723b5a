#include "regmap/words.hpp"

#include <algorithm>

namespace regmap {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == inverse_letter(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

Word Word::inverse() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (Letter& l : rev) l = inverse_letter(l);
  Word w;
  w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
  return w;
}

Word Word::pow(int exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  const int reps = exponent < 0 ? -exponent : exponent;
  std::vector<Letter> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i) {
    for (Letter l : base.letters_) push_reduced(out, l);
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  for (Letter l : b.letters_) push_reduced(out, l);
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::optional<int> Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::string to_string(const Word& w, const std::vector<std::string>& generators) {
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const int run = static_cast<int>(j - i);
    const int exp = letter_inverted(ls[i]) ? -run : run;
    if (!out.empty()) out += '*';
    out += generators[letter_gen(ls[i])];
    if (exp != 1) {
      out += '^';
      out += std::to_string(exp);
    }
    i = j;
  }
  return out;
}

std::string to_string(const Presentation& p) {
  std::string out = "gens";
  for (const auto& g : p.generators) {
    out += ' ';
    out += g;
  }
  out += " ; rels ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(p.relators[i], p.generators);
  }
  return out;
}

}  // namespace regmap
