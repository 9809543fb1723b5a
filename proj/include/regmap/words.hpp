#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace regmap {

// A letter packs a generator index and a sign into one int:
// 2*g is the generator itself, 2*g + 1 its inverse.
using Letter = int;

constexpr Letter positive_letter(int gen) { return 2 * gen; }
constexpr Letter negative_letter(int gen) { return 2 * gen + 1; }
constexpr Letter inverse_letter(Letter l) { return l ^ 1; }
constexpr int letter_gen(Letter l) { return l >> 1; }
constexpr bool letter_inverted(Letter l) { return (l & 1) != 0; }

// A freely reduced word over the generators of some presentation.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces on construction

  static Word generator(int gen) { return Word({positive_letter(gen)}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const;
  Word pow(int exponent) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  std::vector<Letter> letters_;
};

// [a, b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::optional<int> generator_index(std::string_view name) const;
};

// Canonical text forms; parse(to_string(x)) reproduces x exactly.
std::string to_string(const Word& w, const std::vector<std::string>& generators);
std::string to_string(const Presentation& p);

}  // namespace regmap
