#pragma once

// 231-avoiders in S*_{3n} are in bijection with words over {E, L, R} of length
// n-1. Each letter inserts a new 312-form 3-cycle next to the cycle holding the
// current maximum; decoding peels that cycle off again.

#include "star3/bigint.hpp"
#include "star3/permutation.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace star3 {

enum class ElrLetter : char { E = 'E', L = 'L', R = 'R' };

using ElrWord = std::vector<ElrLetter>;

inline std::string to_string(const ElrWord& w) {
  std::string s;
  for (auto l : w) s += static_cast<char>(l);
  return s;
}

inline ElrWord parse_elr_word(std::string_view s) {
  ElrWord w;
  for (char ch : s) {
    if (ch != 'E' && ch != 'L' && ch != 'R')
      throw std::invalid_argument("ELR word has letter outside {E,L,R}: '" + std::string(1, ch) + "'");
    w.push_back(static_cast<ElrLetter>(ch));
  }
  return w;
}

/// Positions a < b of the cycle (a, 3n, b) holding the maximum.
struct MaxCycleAnchor {
  int a = 0;
  int b = 0;
  friend bool operator==(const MaxCycleAnchor&, const MaxCycleAnchor&) = default;
};

inline const Pattern& pattern_231() {
  static const Pattern p{2, 3, 1};
  return p;
}

inline bool in_av231(const Permutation& p) {
  return p.size() % 3 == 0 && is_three_cycle_only(p) && avoids(p, pattern_231());
}

inline void require_av231(const Permutation& p) {
  if (p.empty() || p.size() % 3 != 0) throw std::invalid_argument("length is not a positive multiple of 3");
  if (!is_three_cycle_only(p)) throw std::invalid_argument("not composed only of 3-cycles");
  if (contains_pattern(p, pattern_231())) throw std::invalid_argument("contains the pattern 231");
}

inline MaxCycleAnchor anchor(const Permutation& p) {
  require_av231(p);
  const int m = p.size();
  // The max cycle is (a, m, b): pi(a) = m, pi(m) = b, pi(b) = a.
  const int a = p.position_of(m);
  const int b = p(m);
  if (!(a < b && b < m) || p(b) != a) throw std::logic_error("maximum cycle is not of the form (a, 3n, b)");
  return {a, b};
}

namespace detail {

// Builds the length-(m+3) result: `slot_before[i]` new entries precede old
// position i (1-based, index m+1 means the end), filled left to right with
// `new_values`; old entries are relabelled order-preservingly onto the rest.
inline Permutation insert_block(const Permutation& p, std::vector<int> slot_before,
                                const std::array<int, 3>& new_values) {
  const int m = p.size();
  std::vector<bool> taken(m + 4, false);
  for (int v : new_values) taken[v] = true;
  std::vector<int> relabel(m + 1);
  for (int v = 1, next = 1; v <= m; ++v) {
    while (taken[next]) ++next;
    relabel[v] = next++;
  }
  std::vector<int> out;
  out.reserve(m + 3);
  int k = 0;
  for (int i = 1; i <= m + 1; ++i) {
    for (int s = 0; s < slot_before[i]; ++s) out.push_back(new_values[k++]);
    if (i <= m) out.push_back(relabel[p(i)]);
  }
  return Permutation(std::move(out));
}

}  // namespace detail

/// Appends 3n+3, 3n+1, 3n+2.
inline Permutation insert_E(const Permutation& p) {
  require_av231(p);
  const int m = p.size();
  std::vector<int> slots(m + 2, 0);
  slots[m + 1] = 3;
  return detail::insert_block(p, slots, {m + 3, m + 1, m + 2});
}

/// New entries just before position a, just before position b, and at the end;
/// values 3n+3, a, b+1.
inline Permutation insert_L(const Permutation& p) {
  const auto [a, b] = anchor(p);
  const int m = p.size();
  std::vector<int> slots(m + 2, 0);
  ++slots[a], ++slots[b], ++slots[m + 1];
  return detail::insert_block(p, slots, {m + 3, a, b + 1});
}

/// New entries just before position a, just after position b, and at the end;
/// values 3n+3, a, b+2.
inline Permutation insert_R(const Permutation& p) {
  const auto [a, b] = anchor(p);
  const int m = p.size();
  std::vector<int> slots(m + 2, 0);
  ++slots[a], ++slots[b + 1], ++slots[m + 1];
  return detail::insert_block(p, slots, {m + 3, a, b + 2});
}

inline Permutation insert_letter(const Permutation& p, ElrLetter l) {
  switch (l) {
    case ElrLetter::E: return insert_E(p);
    case ElrLetter::L: return insert_L(p);
    case ElrLetter::R: return insert_R(p);
  }
  throw std::invalid_argument("bad letter");
}

/// Undoes the last insertion: returns tau and the letter with insert_letter(tau) == p.
inline std::pair<Permutation, ElrLetter> decode_step(const Permutation& p) {
  require_av231(p);
  const int m = p.size();
  if (m < 6) throw std::invalid_argument("decode_step needs at least two cycles");
  const int A = p.position_of(m);
  const int B = p(m);

  ElrLetter letter;
  if (B == m - 1) {
    letter = ElrLetter::E;
  } else {
    // Cycle through m-1, as the element set {m-1, pi(m-1), pi(pi(m-1))}.
    const int u = p(m - 1), w = p(u);
    auto has = [&](int x) { return x == u || x == w; };
    if (has(A + 1) && has(B + 1)) letter = ElrLetter::L;
    else if (has(A + 1) && has(B - 1)) letter = ElrLetter::R;
    else throw std::logic_error("231 decode: cycle of 3n+2 matches neither L nor R");
  }

  std::vector<int> rest;
  rest.reserve(m - 3);
  for (int i = 1; i <= m; ++i)
    if (i != A && i != B && i != m) rest.push_back(p(i));
  Permutation tau = standardize(rest);
  if (insert_letter(tau, letter) != p) throw std::logic_error("231 decode: reinsertion does not reproduce input");
  return {std::move(tau), letter};
}

/// Folds the insertions over the seed 312.
inline Permutation encode(const ElrWord& w) {
  Permutation p{3, 1, 2};
  for (auto l : w) p = insert_letter(p, l);
  return p;
}

inline ElrWord decode(const Permutation& p) {
  require_av231(p);
  ElrWord letters;
  Permutation cur = p;
  while (cur.size() > 3) {
    auto [tau, l] = decode_step(cur);
    letters.push_back(l);
    cur = std::move(tau);
  }
  return {letters.rbegin(), letters.rend()};
}

/// All words of the given length, E < L < R lexicographically.
inline std::vector<ElrWord> all_elr_words(int length) {
  std::vector<ElrWord> out{ElrWord{}};
  for (int i = 0; i < length; ++i) {
    std::vector<ElrWord> next;
    next.reserve(out.size() * 3);
    for (const auto& w : out)
      for (auto l : {ElrLetter::E, ElrLetter::L, ElrLetter::R}) {
        next.push_back(w);
        next.back().push_back(l);
      }
    out = std::move(next);
  }
  return out;
}

inline BigInt count_231(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return power(3, n - 1);
}

}  // namespace star3
