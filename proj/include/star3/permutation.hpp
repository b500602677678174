#pragma once

// Permutations in one-line notation, cycle structure, classical pattern
// containment and the two symmetries (inverse, reverse-complement) that act on
// permutations built only from 3-cycles.

#include "star3/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace star3 {

/// A bijection on [m] stored in one-line notation; values()[i] is pi(i+1).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int m = size();
    std::vector<bool> seen(m + 1, false);
    for (int v : values_) {
      if (v < 1 || v > m || seen[v])
        throw std::invalid_argument("not a permutation of [" + std::to_string(m) + "]");
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// pi(i) with 1-based i.
  int operator()(int i) const { return values_[i - 1]; }

  std::span<const int> values() const { return values_; }
  const std::vector<int>& vector() const { return values_; }

  /// 1-based position holding value v.
  int position_of(int v) const {
    auto it = std::find(values_.begin(), values_.end(), v);
    if (it == values_.end()) throw std::out_of_range("value not in permutation");
    return static_cast<int>(it - values_.begin()) + 1;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

using Pattern = Permutation;

/// Space-separated one-line notation, "3 1 2".
inline std::string to_one_line(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p(i));
  }
  return out;
}

/// Compact notation for permutations of length <= 9, "312".
inline std::string to_compact(const Permutation& p) {
  if (p.size() > 9) return to_one_line(p);
  std::string out;
  for (int v : p.values()) out += static_cast<char>('0' + v);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_one_line(p);
}

/// Parses "3 1 2" or, for a single whitespace-free token of length >= 2,
/// the compact digit form "312".
inline Permutation parse_one_line(std::string_view text) {
  std::vector<std::string> tokens;
  {
    std::string tok;
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        if (!tok.empty()) tokens.push_back(std::move(tok)), tok.clear();
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        tok += ch;
      } else {
        throw std::invalid_argument("unexpected character in permutation: '" + std::string(1, ch) + "'");
      }
    }
    if (!tok.empty()) tokens.push_back(std::move(tok));
  }
  std::vector<int> values;
  if (tokens.size() == 1 && tokens[0].size() >= 2) {
    for (char ch : tokens[0]) values.push_back(ch - '0');
  } else {
    for (const auto& t : tokens) values.push_back(std::stoi(t));
  }
  return Permutation(std::move(values));
}

enum class CycleForm { Form312, Form231 };

inline std::string_view to_string(CycleForm f) { return f == CycleForm::Form312 ? "312" : "231"; }

/// Disjoint cycles, each rotated to start at its smallest element and listed by
/// that element. For a 3-cycle (a, b, c): pi(a) = b, pi(b) = c, pi(c) = a.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  /// True iff every cycle has length 3; only then is `forms` populated.
  bool three_cycles_only = false;
  std::vector<CycleForm> forms;
};

/// Form of the 3-cycle (a, b, c) with a smallest. Reading positions a < min(b,c)
/// left to right: b < c gives values b, c, a (231); c < b gives b, a, c (312).
inline CycleForm form_of_cycle(int /*a*/, int b, int c) {
  return c < b ? CycleForm::Form312 : CycleForm::Form231;
}

inline CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition d;
  const int m = p.size();
  std::vector<bool> seen(m + 1, false);
  for (int start = 1; start <= m; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    for (int x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      cyc.push_back(x);
    }
    d.cycles.push_back(std::move(cyc));
  }
  d.three_cycles_only = m > 0 && std::all_of(d.cycles.begin(), d.cycles.end(),
                                             [](const auto& c) { return c.size() == 3; });
  if (d.three_cycles_only) {
    for (const auto& c : d.cycles) d.forms.push_back(form_of_cycle(c[0], c[1], c[2]));
  }
  return d;
}

/// "(1,3,2)(4,6,5)". Fixed points print as "(k)".
inline std::string to_cycle_string(const Permutation& p) {
  std::string out;
  for (const auto& c : cycle_decomposition(p).cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

/// Parses cycle notation. Elements not mentioned are fixed points;
/// the length is the largest mentioned element unless `length` is given.
inline Permutation parse_cycles(std::string_view text, std::optional<int> length = std::nullopt) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument("expected a number in cycle notation");
      cyc.push_back(std::stoi(std::string(text.substr(i, j - i))));
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == ')') { ++i; break; }
      throw std::invalid_argument("unterminated cycle");
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  int m = length.value_or(0);
  if (!length) {
    for (const auto& c : cycles)
      for (int x : c) m = std::max(m, x);
  }
  std::vector<int> v(m, 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int from = c[k], to = c[(k + 1) % c.size()];
      if (from < 1 || from > m || v[from - 1] != 0)
        throw std::invalid_argument("cycles are not disjoint on [" + std::to_string(m) + "]");
      v[from - 1] = to;
    }
  }
  for (int k = 0; k < m; ++k)
    if (v[k] == 0) v[k] = k + 1;
  return Permutation(std::move(v));
}

inline bool is_three_cycle_only(const Permutation& p) {
  return cycle_decomposition(p).three_cycles_only;
}

namespace detail {

inline int sign(int x) { return (x > 0) - (x < 0); }

// Extends a partial embedding of sigma[0..depth) into p, positions strictly increasing.
inline bool embed(std::span<const int> p, std::span<const int> sigma, std::vector<int>& chosen,
                  int depth, int from) {
  const int k = static_cast<int>(sigma.size());
  if (depth == k) return true;
  const int m = static_cast<int>(p.size());
  for (int j = from; j <= m - (k - depth); ++j) {
    bool ok = true;
    for (int l = 0; l < depth && ok; ++l)
      ok = sign(p[j] - p[chosen[l]]) == sign(sigma[depth] - sigma[l]);
    if (!ok) continue;
    chosen[depth] = j;
    if (embed(p, sigma, chosen, depth + 1, j + 1)) return true;
  }
  return false;
}

}  // namespace detail

/// True iff some subsequence of p is order-isomorphic to sigma. Naive
/// subsequence search with early exit; a pattern longer than p never occurs.
inline bool contains_pattern(std::span<const int> p, std::span<const int> sigma) {
  if (sigma.size() > p.size()) return false;
  std::vector<int> chosen(sigma.size());
  return detail::embed(p, sigma, chosen, 0, 0);
}

inline bool contains_pattern(const Permutation& p, const Pattern& sigma) {
  return contains_pattern(p.values(), sigma.values());
}

inline bool avoids(const Permutation& p, const Pattern& sigma) { return !contains_pattern(p, sigma); }

inline Permutation inverse(const Permutation& p) {
  std::vector<int> q(p.size());
  for (int i = 1; i <= p.size(); ++i) q[p(i) - 1] = i;
  return Permutation(std::move(q));
}

/// q(i) = m + 1 - p(m + 1 - i).
inline Permutation reverse_complement(const Permutation& p) {
  const int m = p.size();
  std::vector<int> q(m);
  for (int i = 1; i <= m; ++i) q[i - 1] = m + 1 - p(m + 1 - i);
  return Permutation(std::move(q));
}

/// Relabels a sequence of distinct integers to [len] preserving relative order.
inline Permutation standardize(std::span<const int> seq) {
  std::vector<int> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), seq[i]) - sorted.begin()) + 1;
  return Permutation(std::move(out));
}

/// All of S_k in lexicographic order.
inline std::vector<Permutation> all_permutations(int k) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) v[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// (3n)! / (n! 3^n): permutations of [3n] made only of 3-cycles.
inline BigInt star_cardinality(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  return factorial(3 * n) / (factorial(n) * power(3, n));
}

}  // namespace star3
