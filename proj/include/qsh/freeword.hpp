#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsh/qfield.hpp"

namespace qsh {

enum class Letter : uint8_t { x = 0, y = 1 };

inline Letter other(Letter l) { return l == Letter::x ? Letter::y : Letter::x; }

/// Word in the free monoid on {x, y}, packed as a bit sequence.
/// Bit i of bits holds position i (0 = x, 1 = y). Positions read left
/// to right. Canonical order: shorter first, then lexicographic with x < y.
struct Word {
  uint32_t bits = 0;
  uint8_t len = 0;

  static constexpr int kMaxLen = 31;

  static Word empty() { return {}; }
  static Word letter(Letter l) { return Word{l == Letter::y ? 1u : 0u, 1}; }
  /// Accepts "x"/"y" strings and "1" for the empty word.
  static Word parse(std::string_view s);

  int size() const { return len; }
  bool is_empty() const { return len == 0; }
  Letter at(int i) const { return (bits >> i) & 1u ? Letter::y : Letter::x; }
  Letter first() const { return at(0); }
  Letter last() const { return at(len - 1); }

  /// Number of x letters / y letters: bidegree (r, s).
  std::pair<int, int> bidegree() const;

  Word concat(Word o) const;
  Word prepend(Letter l) const;
  Word append(Letter l) const;
  Word drop_first() const;
  Word drop_last() const;

  Word sigma() const;   // exchange x and y
  Word dagger() const;  // reverse
  Word tau() const;     // sigma then dagger (they commute)

  std::string str() const;  // "1" for the empty word

  bool operator==(const Word& o) const { return len == o.len && bits == o.bits; }
  bool operator<(const Word& o) const;
};

/// All words with r x's and s y's, in canonical (lexicographic) order.
std::vector<Word> words_of_bidegree(int r, int s);

/// Finite linear combination of words with RatFunc coefficients.
/// Canonical: no zero coefficients; iteration follows the canonical
/// word order, so printing and comparisons are deterministic.
class FreeElement {
 public:
  FreeElement() = default;
  static FreeElement zero() { return {}; }
  static FreeElement unit() { return from_word(Word::empty()); }
  static FreeElement from_word(Word w, RatFunc c = RatFunc(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  RatFunc coeff(const Word& w) const;

  /// Bidegree when homogeneous and nonzero, nullopt otherwise.
  std::optional<std::pair<int, int>> bidegree() const;

  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  FreeElement operator-() const;
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }

  FreeElement& scale(const RatFunc& c);
  /// this += c * o
  void add_scaled(const FreeElement& o, const RatFunc& c);
  /// this += c * (w prepended to every word of o); used by the shuffle recursion.
  void add_prepended(Letter l, const FreeElement& o, const RatFunc& c);

  void add_term(Word w, const RatFunc& c);

  /// Free-algebra (concatenation) product, extended bilinearly.
  FreeElement concat_mul(const FreeElement& o) const;

  FreeElement sigma() const;
  FreeElement dagger() const;
  FreeElement tau() const;

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Canonical text: "coeff*word" terms joined by " + "/" - " in canonical
  /// word order; empty word prints as "1"; zero prints as "0".
  /// pretty=true folds q-integer coefficients and spaces the '*'.
  std::string str(bool pretty = false) const;

 private:
  std::map<Word, RatFunc> terms_;
};

/// Parse element grammar: term (('+'|'-') term)*, term := (scalar '*')? word,
/// word := [xy]+ | '1'. Throws std::invalid_argument on bad input.
FreeElement parse_element(std::string_view s);

}  // namespace qsh
