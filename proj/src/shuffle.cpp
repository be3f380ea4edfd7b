#include "qsh/shuffle.hpp"

#include <string>
#include <vector>

#include "qsh/parallel.hpp"

namespace qsh {

std::shared_ptr<const FreeElement> Shuffler::shuffle_words(Word u, Word v) {
  const Key k{(static_cast<uint64_t>(u.bits) << 6) | u.len,
              (static_cast<uint64_t>(v.bits) << 6) | v.len};
  const bool memoize = u.len + v.len <= cap_;
  if (memoize) {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
  }
  auto val = std::make_shared<const FreeElement>(shuffle_words_impl(u, v));
  if (memoize) {
    std::lock_guard<std::mutex> lk(mu_);
    memo_.emplace(k, val);
  }
  return val;
}

FreeElement Shuffler::shuffle_words_impl(Word u, Word v) {
  if (u.is_empty()) return FreeElement::from_word(v);
  if (v.is_empty()) return FreeElement::from_word(u);
  FreeElement r;
  const auto left = shuffle_words(u.drop_first(), v);
  r.add_prepended(u.first(), *left, RatFunc(1));
  const auto right = shuffle_words(u, v.drop_first());
  const int e = pairing_sum(u, v.first());
  r.add_prepended(v.first(), *right, RatFunc(LaurentPoly::q_power(e)));
  return r;
}

FreeElement Shuffler::shuffle(const FreeElement& a, const FreeElement& b) {
  FreeElement r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) r.add_scaled(*shuffle_words(wa, wb), ca * cb);
  return r;
}

FreeElement Shuffler::shuffle_left(Letter l, const FreeElement& e) {
  FreeElement r;
  const Word lw = Word::letter(l);
  for (const auto& [w, c] : e) r.add_scaled(*shuffle_words(lw, w), c);
  return r;
}

FreeElement Shuffler::shuffle_right(const FreeElement& e, Letter l) {
  FreeElement r;
  const Word lw = Word::letter(l);
  for (const auto& [w, c] : e) r.add_scaled(*shuffle_words(w, lw), c);
  return r;
}

std::size_t Shuffler::memo_size() const {
  std::lock_guard<std::mutex> lk(mu_);
  return memo_.size();
}

void Shuffler::clear_memo() {
  std::lock_guard<std::mutex> lk(mu_);
  memo_.clear();
}

FreeElement insert_letter_left(Letter u, Word v) {
  FreeElement r;
  int e = 0;  // running (v1,u)+...+(vi,u)
  for (int i = 0; i <= v.size(); ++i) {
    // v1..vi u v(i+1)..vn
    Word w;
    for (int j = 0; j < i; ++j) w = w.append(v.at(j));
    w = w.append(u);
    for (int j = i; j < v.size(); ++j) w = w.append(v.at(j));
    r.add_term(w, RatFunc(LaurentPoly::q_power(e)));
    if (i < v.size()) e += pairing(v.at(i), u);
  }
  return r;
}

FreeElement insert_letter_right(Word v, Letter u) {
  FreeElement r;
  // exponent for slot i is (vn,u)+...+(v(i+1),u); accumulate from the right
  std::vector<int> exps(static_cast<std::size_t>(v.size()) + 1, 0);
  int e = 0;
  for (int i = v.size(); i-- > 0;) {
    e += pairing(v.at(i), u);
    exps[static_cast<std::size_t>(i)] = e;
  }
  exps[static_cast<std::size_t>(v.size())] = 0;
  for (int i = 0; i <= v.size(); ++i) {
    Word w;
    for (int j = 0; j < i; ++j) w = w.append(v.at(j));
    w = w.append(u);
    for (int j = i; j < v.size(); ++j) w = w.append(v.at(j));
    r.add_term(w, RatFunc(LaurentPoly::q_power(exps[static_cast<std::size_t>(i)])));
  }
  return r;
}

FreeElement shuffle_words_right_rec(Word u, Word v) {
  if (u.is_empty()) return FreeElement::from_word(v);
  if (v.is_empty()) return FreeElement::from_word(u);
  FreeElement r;
  {
    FreeElement a = shuffle_words_right_rec(u, v.drop_last());
    for (const auto& [w, c] : a) r.add_term(w.append(v.last()), c);
  }
  {
    FreeElement b = shuffle_words_right_rec(u.drop_last(), v);
    int e = 0;
    for (int i = 0; i < v.size(); ++i) e += pairing(u.last(), v.at(i));
    for (const auto& [w, c] : b)
      r.add_term(w.append(u.last()), c * RatFunc(LaurentPoly::q_power(e)));
  }
  return r;
}

std::pair<FreeElement, FreeElement> qserre_shuffle_residuals(Shuffler& sh) {
  const FreeElement x = FreeElement::from_word(Word::letter(Letter::x));
  const FreeElement y = FreeElement::from_word(Word::letter(Letter::y));
  const RatFunc three{qint(3)};
  auto serre = [&](const FreeElement& a, const FreeElement& b) {
    FreeElement a2 = sh.shuffle(a, a);
    FreeElement a3 = sh.shuffle(a2, a);
    FreeElement r = sh.shuffle(a3, b);                      // a a a b
    FreeElement t = sh.shuffle(a2, sh.shuffle(b, a));       // a a b a
    r.add_scaled(t, -three);
    t = sh.shuffle(a, sh.shuffle(b, a2));                   // a b a a
    r.add_scaled(t, three);
    t = sh.shuffle(b, a3);                                  // b a a a
    r -= t;
    return r;
  };
  return {serre(x, y), serre(y, x)};
}

namespace {

std::vector<Word> words_up_to_len(int maxlen) {
  std::vector<Word> out;
  for (int n = 0; n <= maxlen; ++n)
    for (uint32_t bits = 0; bits < (1u << n); ++bits)
      out.push_back(Word{bits, static_cast<uint8_t>(n)});
  return out;
}

}  // namespace

Report check_shuffle_algebra(Shuffler& sh, int pair_len, int tri_len, int threads) {
  Report rep{"shuffle algebra"};

  const auto [rx, ry] = qserre_shuffle_residuals(sh);
  rep.add("q-Serre residual, three x against one y", rx.is_zero(),
          rx.is_zero() ? "" : "residual " + rx.str());
  rep.add("q-Serre residual, three y against one x", ry.is_zero(),
          ry.is_zero() ? "" : "residual " + ry.str());

  const std::vector<Word> words = words_up_to_len(pair_len);
  {
    std::vector<std::string> bad(words.size());
    parallel_for(words.size(), threads, [&](std::size_t i) {
      const Word u = words[i];
      for (const Word v : words_up_to_len(pair_len - u.size())) {
        if (!(*sh.shuffle_words(u, v) == shuffle_words_right_rec(u, v))) {
          bad[i] = "recursions differ at " + u.str() + " * " + v.str();
          return;
        }
      }
    });
    std::string why;
    for (const auto& b : bad)
      if (!b.empty()) { why = b; break; }
    rep.add("left recursion = right recursion, total length <= " +
                std::to_string(pair_len),
            why.empty(), why);
  }
  {
    std::string why;
    for (const Word v : words_up_to_len(pair_len - 1)) {
      for (const Letter l : {Letter::x, Letter::y}) {
        if (!(insert_letter_left(l, v) == *sh.shuffle_words(Word::letter(l), v)))
          why = "left insertion differs at " + Word::letter(l).str() + " * " + v.str();
        if (!(insert_letter_right(v, l) == *sh.shuffle_words(v, Word::letter(l))))
          why = "right insertion differs at " + v.str() + " * " + Word::letter(l).str();
        if (!why.empty()) break;
      }
      if (!why.empty()) break;
    }
    rep.add("closed insertion forms = recursion, total length <= " +
                std::to_string(pair_len),
            why.empty(), why);
  }
  {
    std::string why;
    for (const Word v : words_up_to_len(pair_len)) {
      if (!(*sh.shuffle_words(Word::empty(), v) == FreeElement::from_word(v)) ||
          !(*sh.shuffle_words(v, Word::empty()) == FreeElement::from_word(v))) {
        why = "unit law fails at " + v.str();
        break;
      }
    }
    rep.add("empty word is a two-sided unit, length <= " + std::to_string(pair_len),
            why.empty(), why);
  }
  {
    const std::vector<Word> as = words_up_to_len(tri_len);
    std::vector<std::string> bad(as.size());
    parallel_for(as.size(), threads, [&](std::size_t i) {
      const Word a = as[i];
      for (const Word b : words_up_to_len(tri_len - a.size())) {
        const FreeElement ab{*sh.shuffle_words(a, b)};
        for (const Word c : words_up_to_len(tri_len - a.size() - b.size())) {
          const FreeElement bc{*sh.shuffle_words(b, c)};
          if (!(sh.shuffle(ab, FreeElement::from_word(c)) ==
                sh.shuffle(FreeElement::from_word(a), bc))) {
            bad[i] = "associativity fails at (" + a.str() + ", " + b.str() +
                     ", " + c.str() + ")";
            return;
          }
        }
      }
    });
    std::string why;
    for (const auto& b : bad)
      if (!b.empty()) { why = b; break; }
    rep.add("associativity on word triples, total length <= " +
                std::to_string(tri_len),
            why.empty(), why);
  }
  return rep;
}

}  // namespace qsh
