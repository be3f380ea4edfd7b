#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "qsh/freeword.hpp"
#include "qsh/report.hpp"

namespace qsh {

/// Bilinear form on letters: (x,x) = (y,y) = 2, (x,y) = (y,x) = -2.
inline int pairing(Letter a, Letter b) { return a == b ? 2 : -2; }

/// Sum of pairings of every letter of w against l:
/// 2(r - s) for l = x, 2(s - r) for l = y, where (r,s) = bidegree(w).
inline int pairing_sum(Word w, Letter l) {
  auto [r, s] = w.bidegree();
  return l == Letter::x ? 2 * (r - s) : 2 * (s - r);
}

/// Shuffle product context. Word-by-word products are memoized; the table is
/// mutex-guarded so concurrent sweeps see consistent entries, and values are
/// handed out as shared_ptr-to-const to avoid copies.
class Shuffler {
 public:
  explicit Shuffler(int memo_total_len_cap = 12) : cap_(memo_total_len_cap) {}

  /// u * v for words, by the recursion
  ///   u*v = u1((u2..ur)*v) + v1(u*(v2..vs)) q^{(u1,v1)+...+(ur,v1)}
  /// with 1*v = v*1 = v.
  std::shared_ptr<const FreeElement> shuffle_words(Word u, Word v);

  /// Bilinear extension.
  FreeElement shuffle(const FreeElement& a, const FreeElement& b);

  /// Convenience: letter * e and e * letter.
  FreeElement shuffle_left(Letter l, const FreeElement& e);
  FreeElement shuffle_right(const FreeElement& e, Letter l);

  std::size_t memo_size() const;
  void clear_memo();

 private:
  FreeElement shuffle_words_impl(Word u, Word v);

  struct Key {
    uint64_t a, b;
    bool operator==(const Key& o) const { return a == o.a && b == o.b; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      uint64_t h = k.a * 0x9e3779b97f4a7c15ULL ^ (k.b + 0x7f4a7c159e3779b9ULL);
      h ^= h >> 29;
      return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ULL);
    }
  };

  int cap_;
  mutable std::mutex mu_;
  std::unordered_map<Key, std::shared_ptr<const FreeElement>, KeyHash> memo_;
};

/// Independent closed form, letter on the left:
///   u * v = sum_i v1..vi u v(i+1)..vn q^{(v1,u)+...+(vi,u)}.
/// Test oracle for shuffle_words; also exercised directly in checks.
FreeElement insert_letter_left(Letter u, Word v);

/// Independent closed form, letter on the right:
///   v * u = sum_i v1..vi u v(i+1)..vn q^{(vn,u)+...+(v(i+1),u)}.
FreeElement insert_letter_right(Word v, Letter u);

/// Independent right-handed recursion
///   u*v = (u*(v1..v(s-1)))vs + ((u1..u(r-1))*v)ur q^{(ur,v1)+...+(ur,vs)},
/// used to cross-check shuffle_words. Unmemoized; intended for small words.
FreeElement shuffle_words_right_rec(Word u, Word v);

/// Left-hand q-Serre relation in the shuffle algebra:
///   x*x*x*y - [3] x*x*y*x + [3] x*y*x*x - y*x*x*x, which must vanish,
/// and the companion with x and y exchanged. Returns both residuals.
std::pair<FreeElement, FreeElement> qserre_shuffle_residuals(Shuffler& sh);

/// Shuffle-algebra verification suite:
///   - both q-Serre residuals vanish;
///   - the memoized left recursion agrees with the right-handed recursion
///     on every word pair of total length <= pair_len;
///   - both closed insertion forms agree with the recursion on every
///     (letter, word) pair of total length <= pair_len;
///   - unit laws 1*v = v*1 = v at the same lengths;
///   - associativity (a*b)*c = a*(b*c) on exhaustive word triples of total
///     length <= tri_len.
Report check_shuffle_algebra(Shuffler& sh, int pair_len, int tri_len, int threads);

}  // namespace qsh
