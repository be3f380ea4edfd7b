#include "qsh/freeword.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qsh {

Word Word::parse(std::string_view s) {
  if (s == "1") return empty();
  Word w;
  for (char c : s) {
    if (c == 'x') {
      w = w.append(Letter::x);
    } else if (c == 'y') {
      w = w.append(Letter::y);
    } else {
      throw std::invalid_argument("invalid word character: " + std::string(1, c));
    }
  }
  return w;
}

std::pair<int, int> Word::bidegree() const {
  const int s = std::popcount(bits);
  return {len - s, s};
}

Word Word::concat(Word o) const {
  if (len + o.len > kMaxLen) throw std::length_error("word too long");
  return Word{bits | (o.bits << len), static_cast<uint8_t>(len + o.len)};
}

Word Word::prepend(Letter l) const {
  if (len + 1 > kMaxLen) throw std::length_error("word too long");
  return Word{(bits << 1) | (l == Letter::y ? 1u : 0u), static_cast<uint8_t>(len + 1)};
}

Word Word::append(Letter l) const {
  if (len + 1 > kMaxLen) throw std::length_error("word too long");
  return Word{bits | ((l == Letter::y ? 1u : 0u) << len), static_cast<uint8_t>(len + 1)};
}

Word Word::drop_first() const {
  if (len == 0) throw std::logic_error("drop_first on empty word");
  return Word{bits >> 1, static_cast<uint8_t>(len - 1)};
}

Word Word::drop_last() const {
  if (len == 0) throw std::logic_error("drop_last on empty word");
  return Word{bits & ((1u << (len - 1)) - 1u), static_cast<uint8_t>(len - 1)};
}

Word Word::sigma() const {
  const uint32_t mask = len == 0 ? 0u : ((1u << len) - 1u);
  return Word{bits ^ mask, len};
}

Word Word::dagger() const {
  uint32_t r = 0;
  for (int i = 0; i < len; ++i) r |= ((bits >> i) & 1u) << (len - 1 - i);
  return Word{r, len};
}

Word Word::tau() const { return sigma().dagger(); }

std::string Word::str() const {
  if (len == 0) return "1";
  std::string s;
  s.reserve(len);
  for (int i = 0; i < len; ++i) s.push_back(at(i) == Letter::x ? 'x' : 'y');
  return s;
}

bool Word::operator<(const Word& o) const {
  if (len != o.len) return len < o.len;
  const uint32_t diff = bits ^ o.bits;
  if (diff == 0) return false;
  const int p = std::countr_zero(diff);  // first differing position
  return ((bits >> p) & 1u) == 0;        // x < y
}

std::vector<Word> words_of_bidegree(int r, int s) {
  if (r < 0 || s < 0) return {};
  if (r + s > Word::kMaxLen) throw std::length_error("bidegree too large");
  std::vector<Word> out;
  Word w;
  // lexicographic enumeration, x before y at each position
  auto rec = [&](auto&& self, int nx, int ny) -> void {
    if (nx == 0 && ny == 0) {
      out.push_back(w);
      return;
    }
    if (nx > 0) {
      w = w.append(Letter::x);
      self(self, nx - 1, ny);
      w = w.drop_last();
    }
    if (ny > 0) {
      w = w.append(Letter::y);
      self(self, nx, ny - 1);
      w = w.drop_last();
    }
  };
  rec(rec, r, s);
  return out;
}

// ---------------------------------------------------------------------------
// FreeElement

FreeElement FreeElement::from_word(Word w, RatFunc c) {
  FreeElement e;
  if (!c.is_zero()) e.terms_.emplace(w, std::move(c));
  return e;
}

RatFunc FreeElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

std::optional<std::pair<int, int>> FreeElement::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  auto it = terms_.begin();
  const auto d = it->first.bidegree();
  for (++it; it != terms_.end(); ++it)
    if (it->first.bidegree() != d) return std::nullopt;
  return d;
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreeElement FreeElement::operator-() const {
  FreeElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, -c);
  return r;
}

FreeElement& FreeElement::scale(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

void FreeElement::add_scaled(const FreeElement& o, const RatFunc& c) {
  if (c.is_zero()) return;
  for (const auto& [w, v] : o.terms_) add_term(w, v * c);
}

void FreeElement::add_prepended(Letter l, const FreeElement& o, const RatFunc& c) {
  if (c.is_zero()) return;
  for (const auto& [w, v] : o.terms_) add_term(w.prepend(l), v * c);
}

void FreeElement::add_term(Word w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement FreeElement::concat_mul(const FreeElement& o) const {
  FreeElement r;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) r.add_term(wa.concat(wb), ca * cb);
  return r;
}

FreeElement FreeElement::sigma() const {
  FreeElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w.sigma(), c);
  return r;
}

FreeElement FreeElement::dagger() const {
  FreeElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w.dagger(), c);
  return r;
}

FreeElement FreeElement::tau() const {
  FreeElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w.tau(), c);
  return r;
}

std::string FreeElement::str(bool pretty) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool neg = c.print_sign() < 0;
    const RatFunc a = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (a.is_one()) {
      os << w.str();
    } else {
      std::string cs = pretty ? a.pretty() : a.str();
      // sums render with spaces and need parentheses; atoms do not
      const bool compound = cs.find(' ') != std::string::npos;
      if (compound && cs.front() != '(') cs = "(" + cs + ")";
      os << cs << (pretty ? " * " : "*") << w.str();
    }
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view v) {
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
  return v;
}

// A '+'/'-' at paren/bracket depth 0 separates terms only when it follows a
// completed operand; after '^', '*', '/', '(' or at term start it is a sign.
bool ends_operand(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == ')' || c == ']' ||
         c == 'q' || c == 'x' || c == 'y';
}

}  // namespace

FreeElement parse_element(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  char prev = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(' || c == '[') {
      ++depth;
    } else if (c == ')' || c == ']') {
      --depth;
      if (depth < 0) throw std::invalid_argument("element parse error: unbalanced ')'");
    } else if ((c == '+' || c == '-') && depth == 0 && ends_operand(prev)) {
      parts.push_back(s.substr(start, i - start));
      start = i;  // keep the sign with the next term
    }
    prev = c;
  }
  parts.push_back(s.substr(start));

  FreeElement e;
  bool any = false;
  for (std::string_view term : parts) {
    term = trim(term);
    if (term.empty()) continue;
    any = true;
    bool neg = false;
    if (term.front() == '+' || term.front() == '-') {
      neg = term.front() == '-';
      term = trim(term.substr(1));
    }
    if (term.empty()) throw std::invalid_argument("element parse error: dangling sign");
    // split at the last top-level '*': scalar '*' word
    int d = 0;
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(' || term[i] == '[') ++d;
      if (term[i] == ')' || term[i] == ']') --d;
      if (term[i] == '*' && d == 0) split = i;
    }
    RatFunc coeff(1);
    std::string_view word_part = term;
    if (split != std::string_view::npos) {
      coeff = parse_scalar(trim(term.substr(0, split)));
      word_part = trim(term.substr(split + 1));
    }
    Word w = Word::parse(word_part);
    if (neg) coeff = -coeff;
    e.add_term(w, coeff);
  }
  if (!any) throw std::invalid_argument("element parse error: empty input");
  return e;
}

}  // namespace qsh
