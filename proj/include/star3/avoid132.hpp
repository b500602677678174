#pragma once

// 132-avoiders in S*_{3n} whose cycles all have form 312 (the class A_{3n}).
// Such a permutation is determined by a Dyck word W over {1,2} read off
// positions n+1..3n together with one 132-avoiding pattern per block of
// Type(W). Dyck words of a given type are counted by Motzkin numbers.

#include "star3/bigint.hpp"
#include "star3/numbers.hpp"
#include "star3/permutation.hpp"
#include "star3/words.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace star3 {

inline const Pattern& pattern_132() {
  static const Pattern p{1, 3, 2};
  return p;
}

/// Value v is in T_i iff it is the i-th smallest element of its cycle.
struct TPartition132 {
  std::vector<int> t1, t2, t3;  // sorted
  friend bool operator==(const TPartition132&, const TPartition132&) = default;
};

inline bool in_class_A(const Permutation& p) {
  if (p.empty() || p.size() % 3 != 0) return false;
  auto d = cycle_decomposition(p);
  if (!d.three_cycles_only) return false;
  for (auto f : d.forms)
    if (f != CycleForm::Form312) return false;
  return avoids(p, pattern_132());
}

inline void require_class_A(const Permutation& p) {
  if (p.empty() || p.size() % 3 != 0) throw std::invalid_argument("length is not a positive multiple of 3");
  auto d = cycle_decomposition(p);
  if (!d.three_cycles_only) throw std::invalid_argument("not composed only of 3-cycles");
  for (auto f : d.forms)
    if (f != CycleForm::Form312) throw std::invalid_argument("has a cycle of form 231");
  if (contains_pattern(p, pattern_132())) throw std::invalid_argument("contains the pattern 132");
}

inline TPartition132 t_partition(const Permutation& p) {
  require_class_A(p);
  TPartition132 t;
  for (auto c : cycle_decomposition(p).cycles) {
    std::sort(c.begin(), c.end());
    t.t1.push_back(c[0]), t.t2.push_back(c[1]), t.t3.push_back(c[2]);
  }
  std::sort(t.t1.begin(), t.t1.end());
  std::sort(t.t2.begin(), t.t2.end());
  std::sort(t.t3.begin(), t.t3.end());
  return t;
}

/// w_i = j iff pi(n+i) lies in T_j, for i = 1..2n.
inline DyckWord12 dyck_word_of(const Permutation& p) {
  const auto t = t_partition(p);
  const int n = p.size() / 3;
  std::vector<int> cls(p.size() + 1, 0);
  for (int v : t.t1) cls[v] = 1;
  for (int v : t.t2) cls[v] = 2;
  for (int v : t.t3) cls[v] = 3;
  std::string w;
  for (int i = n + 1; i <= 3 * n; ++i) {
    if (cls[p(i)] == 3) throw std::logic_error("T_3 value after position n");
    w += static_cast<char>('0' + cls[p(i)]);
  }
  return DyckWord12(std::move(w));
}

/// i is a switch index iff the i-th 2 is followed by 1 or the i-th 1 by 2;
/// the type is the sequence of gaps between switch indices.
inline Composition type_of(const DyckWord12& w) {
  const auto u = w.open_positions();
  const auto v = w.close_positions();
  const int n = w.semilength();
  auto letter_at = [&](int pos) { return pos <= w.size() ? w[pos - 1] : '\0'; };
  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; i <= n; ++i) {
    if (letter_at(v[i - 1] + 1) == '1' || letter_at(u[i - 1] + 1) == '2') {
      parts.push_back(i - prev);
      prev = i;
    }
  }
  return Composition(std::move(parts));
}

inline bool is_all_ones(const Composition& c) {
  return std::all_of(c.parts().begin(), c.parts().end(), [](int x) { return x == 1; });
}

/// Motzkin word of length k-1 to the Dyck word of semilength k and type (1,...,1).
inline DyckWord12 motzkin_to_dyck11(const MotzkinWord& m) {
  const int k = m.size() + 1;
  std::string w = "1";
  int ones = 1, twos = 0;
  while (static_cast<int>(w.size()) < 2 * k) {
    char next;
    if (w.back() == '1') {
      next = (ones < k && m[ones - 1] == 'U') ? '1' : '2';
    } else {
      if (twos >= k) break;
      next = m[twos - 1] == 'D' ? '2' : '1';
    }
    w += next;
    next == '1' ? ++ones : ++twos;
  }
  DyckWord12 out(w);
  if (out.semilength() != k || !is_all_ones(type_of(out)))
    throw std::logic_error("Motzkin reconstruction produced a word of the wrong type: " + w);
  return out;
}

inline MotzkinWord dyck11_to_motzkin(const DyckWord12& w) {
  if (!is_all_ones(type_of(w))) throw std::invalid_argument("Dyck word is not of type (1,...,1): " + w.str());
  const auto u = w.open_positions();
  const auto v = w.close_positions();
  const int k = w.semilength();
  std::string m;
  for (int i = 1; i < k; ++i) {
    const char after1 = w[u[i - 1]];  // letter at 1-based position u_i + 1
    const char after2 = w[v[i - 1]];
    m += after1 == '1' && after2 == '1' ? 'U' : after1 == '2' && after2 == '2' ? 'D' : 'F';
  }
  return MotzkinWord(std::move(m));
}

/// Replaces the i-th 1 by x_i ones and the i-th 2 by x_i twos.
inline DyckWord12 expand_type(const DyckWord12& w11, const Composition& x) {
  if (w11.semilength() != x.length())
    throw std::invalid_argument("composition length " + std::to_string(x.length()) + " does not match semilength " +
                                std::to_string(w11.semilength()));
  std::string out;
  int ones = 0, twos = 0;
  for (char ch : w11.str()) {
    const int reps = ch == '1' ? x[ones++] : x[twos++];
    out.append(reps, ch);
  }
  return DyckWord12(std::move(out));
}

/// Collapses each type block of 1s (and of 2s) to a single letter.
inline DyckWord12 contract_type(const DyckWord12& w) {
  const auto x = type_of(w);
  std::vector<bool> block_start(w.semilength() + 1, false);
  for (int i = 0, s = 1; i < x.length(); s += x[i++]) block_start[s] = true;
  std::string out;
  int ones = 0, twos = 0;
  for (char ch : w.str()) {
    const int idx = ch == '1' ? ++ones : ++twos;
    if (block_start[idx]) out += ch;
  }
  return DyckWord12(std::move(out));
}

/// The M_{k-1} Dyck words of type x, via Motzkin words of length k-1.
inline std::vector<DyckWord12> enumerate_dyck_of_type(const Composition& x) {
  if (x.length() == 0) throw std::invalid_argument("empty composition");
  std::vector<DyckWord12> out;
  for (const auto& m : all_motzkin_words(x.length() - 1)) out.push_back(expand_type(motzkin_to_dyck11(m), x));
  return out;
}

/// 132-avoiding permutations of [k], lexicographic.
inline std::vector<Permutation> avoiders_132(int k) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(k))
    if (avoids(p, pattern_132())) out.push_back(std::move(p));
  return out;
}

/// The member of A_{3n} with Dyck word w whose i-th block of T_1 values is
/// order-isomorphic to fills[i].
inline Permutation build_A_perm(const DyckWord12& w, const std::vector<Permutation>& fills) {
  const auto x = type_of(w);
  if (static_cast<int>(fills.size()) != x.length())
    throw std::invalid_argument("expected " + std::to_string(x.length()) + " fills for type " + to_string(x));
  for (int i = 0; i < x.length(); ++i) {
    if (fills[i].size() != x[i])
      throw std::invalid_argument("fill " + std::to_string(i + 1) + " has length " + std::to_string(fills[i].size()) +
                                  ", type needs " + std::to_string(x[i]));
    if (contains_pattern(fills[i], pattern_132()))
      throw std::invalid_argument("fill " + std::to_string(i + 1) + " contains 132");
  }
  const int n = w.semilength();
  const auto u = w.open_positions();
  const auto v = w.close_positions();
  std::vector<int> p(3 * n + 1, 0);
  // T_2 values u+n, increasing, at positions v+n.
  for (int j = 0; j < n; ++j) p[v[j] + n] = u[j] + n;
  // Block i of 1s takes the value range (n - sum_{j<=i} x_j, n - sum_{j<i} x_j].
  for (int i = 0, before = 0; i < x.length(); before += x[i++]) {
    const int low = n - before - x[i];
    for (int r = 0; r < x[i]; ++r) p[u[before + r] + n] = low + fills[i](r + 1);
  }
  std::vector<int> pos(3 * n + 1, 0);
  for (int q = n + 1; q <= 3 * n; ++q) pos[p[q]] = q;
  // Value a at position q closes its cycle with pi(a) = position of value q.
  for (int a = 1; a <= n; ++a) p[a] = pos[pos[a]];
  return Permutation(std::vector<int>(p.begin() + 1, p.end()));
}

/// Visits A_{3n}: Dyck words lexicographically, fills lexicographically by block then pattern.
template <class Visitor>
void for_each_A(int n, Visitor&& visit) {
  if (n < 1) return;
  std::map<int, std::vector<Permutation>> avoiders;
  for (const auto& w : all_dyck_words<DyckWord12>(n)) {
    const auto x = type_of(w);
    for (int part : x.parts())
      if (!avoiders.count(part)) avoiders.emplace(part, avoiders_132(part));
    std::vector<Permutation> fills(x.length());
    auto rec = [&](auto&& self, int i) -> void {
      if (i == x.length()) {
        visit(w, build_A_perm(w, fills));
        return;
      }
      for (const auto& f : avoiders.at(x[i])) {
        fills[i] = f;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
}

inline std::vector<Permutation> enumerate_A(int n) {
  std::vector<Permutation> out;
  for_each_A(n, [&](const DyckWord12&, Permutation p) { out.push_back(std::move(p)); });
  return out;
}

namespace detail {

// sum over compositions (x_1..x_k) of n of length_weight[k] * prod part_weight[x_i].
inline BigInt composition_sum(int n, const std::vector<BigInt>& part_weight, const std::vector<BigInt>& length_weight) {
  // d[s] = weighted count of compositions of s into k parts, k advancing each round.
  std::vector<BigInt> d(n + 1, 0);
  d[0] = 1;
  BigInt total = n == 0 ? length_weight[0] : BigInt(0);
  for (int k = 1; k <= n; ++k) {
    std::vector<BigInt> next(n + 1, 0);
    for (int s = 0; s < n; ++s) {
      if (d[s] == 0) continue;
      for (int x = 1; s + x <= n; ++x) next[s + x] += d[s] * part_weight[x];
    }
    d = std::move(next);
    total += length_weight[k] * d[n];
  }
  return total;
}

}  // namespace detail

/// |A_{3n}| = sum_k M_{k-1} sum_{X in P(n,k)} C_{x_1} ... C_{x_k}.
inline BigInt count_A(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const auto c = catalan_numbers(n);
  const auto m = motzkin_numbers(n);
  std::vector<BigInt> by_length(n + 1, 0);
  for (int k = 1; k <= n; ++k) by_length[k] = m[k - 1];
  return detail::composition_sum(n, c, by_length);
}

/// |Av*_{3n}(132)| = 2 * sum over compositions of n of a_{x_1} ... a_{x_k}, a_j = |A_{3j}|.
inline BigInt count_132(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<BigInt> a(n + 1, 0);
  for (int j = 1; j <= n; ++j) a[j] = count_A(j);
  return 2 * detail::composition_sum(n, a, std::vector<BigInt>(n + 1, 1));
}

}  // namespace star3
