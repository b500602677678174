#pragma once

// 321-avoiders in S*_{3n}. The all-312 members are indexed by staircase sets
// T = {t_1 < ... < t_n}, t_i <= 3i-2, through a word over {x, y, z}; mixed
// forms are obtained by choosing one form per balanced segment of that word.
// Summing over Dyck words instead of sets gives a weighted Dyck-path formula.

#include "star3/bigint.hpp"
#include "star3/permutation.hpp"
#include "star3/words.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace star3 {

inline const Pattern& pattern_321() {
  static const Pattern p{3, 2, 1};
  return p;
}

/// Strictly increasing t_1 < ... < t_n with 1 <= t_i <= 3i - 2.
class TSet {
 public:
  TSet() = default;

  explicit TSet(std::vector<int> t) : t_(std::move(t)) {
    if (t_.empty()) throw std::invalid_argument("T-set must be non-empty");
    for (int i = 0; i < size(); ++i) {
      if (t_[i] < 1 || (i > 0 && t_[i] <= t_[i - 1]))
        throw std::invalid_argument("T-set must be strictly increasing positive integers");
      if (t_[i] > 3 * (i + 1) - 2)
        throw std::invalid_argument("T-set violates t_i <= 3i-2 at i=" + std::to_string(i + 1));
    }
  }

  int size() const { return static_cast<int>(t_.size()); }
  int operator[](int i) const { return t_[i]; }
  const std::vector<int>& values() const { return t_; }

  friend bool operator==(const TSet&, const TSet&) = default;
  friend auto operator<=>(const TSet& a, const TSet& b) { return a.t_ <=> b.t_; }

 private:
  std::vector<int> t_;
};

/// "{1,2,7}".
inline std::string to_string(const TSet& t) {
  std::string s = "{";
  for (int i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + "}";
}

inline std::ostream& operator<<(std::ostream& os, const TSet& t) { return os << to_string(t); }

/// Visits the T-sets of size n in lexicographic order.
template <class Visitor>
void for_each_T(int n, Visitor&& visit) {
  if (n < 1) return;
  std::vector<int> t(n);
  auto rec = [&](auto&& self, int i, int lo) -> void {
    if (i == n) {
      visit(static_cast<const std::vector<int>&>(t));
      return;
    }
    for (int v = lo; v <= 3 * (i + 1) - 2; ++v) {
      t[i] = v;
      self(self, i + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
}

inline std::vector<TSet> enumerate_T(int n) {
  std::vector<TSet> out;
  for_each_T(n, [&](const std::vector<int>& t) { out.emplace_back(t); });
  return out;
}

/// Word of length 3n with n of each letter, where the i-th z precedes the
/// i-th x, which precedes the i-th y.
class XYZWord {
 public:
  XYZWord() = default;

  explicit XYZWord(std::string letters) : letters_(std::move(letters)) {
    if (letters_.size() % 3 != 0) throw std::invalid_argument("xyz word length must be a multiple of 3");
    int cx = 0, cy = 0, cz = 0;
    for (char ch : letters_) {
      if (ch == 'x') ++cx;
      else if (ch == 'y') ++cy;
      else if (ch == 'z') ++cz;
      else throw std::invalid_argument("xyz word has letter outside {x,y,z}");
      if (!(cz >= cx && cx >= cy)) throw std::logic_error("xyz word breaks the z-before-x-before-y order: " + letters_);
    }
    if (cx != cy || cy != cz) throw std::invalid_argument("xyz word needs equally many x, y, z");
  }

  const std::string& str() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  int n() const { return size() / 3; }
  char operator[](int i) const { return letters_[i]; }

  /// 1-based positions of letter c, increasing.
  std::vector<int> positions(char c) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (letters_[i] == c) out.push_back(i + 1);
    return out;
  }

  /// Subword of x's and y's.
  DyckWordXY dyck_part() const {
    std::string d;
    for (char ch : letters_)
      if (ch != 'z') d += ch;
    return DyckWordXY(std::move(d));
  }

  friend bool operator==(const XYZWord&, const XYZWord&) = default;
  friend auto operator<=>(const XYZWord& a, const XYZWord& b) { return a.letters_ <=> b.letters_; }
  friend std::ostream& operator<<(std::ostream& os, const XYZWord& w) { return os << w.letters_; }

 private:
  std::string letters_;
};

/// z at the positions of T; each remaining slot k, with prefix W' before it:
/// x if X(W') = Y(W'); otherwise y iff the number of z's before the
/// (Y(W')+1)-th x equals X(W'), else x.
inline XYZWord word_of_T(const TSet& t) {
  const int n = t.size();
  const int len = 3 * n;
  std::string w(len, '?');
  for (int v : t.values()) w[v - 1] = 'z';
  std::vector<int> z_before_x;  // z's preceding the i-th x
  z_before_x.reserve(n);
  int cx = 0, cy = 0, cz = 0;
  for (int k = 1; k <= len; ++k) {
    if (w[k - 1] == 'z') {
      ++cz;
      continue;
    }
    char letter;
    if (cx == cy) letter = 'x';
    else letter = z_before_x[cy] == cx ? 'y' : 'x';
    w[k - 1] = letter;
    if (letter == 'x') {
      z_before_x.push_back(cz);
      ++cx;
    } else {
      ++cy;
    }
  }
  return XYZWord(std::move(w));
}

/// Cycle triples read from a word: x_i = i-th z position (the T_1 value),
/// y_i = i-th x position, z_i = i-th y position.
struct CycleTriples {
  std::vector<int> x, y, z;
};

inline CycleTriples cycle_triples(const XYZWord& w) { return {w.positions('z'), w.positions('x'), w.positions('y')}; }

namespace detail {

inline void write_cycle(std::vector<int>& p, int x, int y, int z, CycleForm form) {
  if (form == CycleForm::Form312) p[x - 1] = z, p[z - 1] = y, p[y - 1] = x;  // (x, z, y)
  else p[x - 1] = y, p[y - 1] = z, p[z - 1] = x;                             // (x, y, z)
}

}  // namespace detail

/// The member of B_{3n} with T_1 = T: the product of the cycles (x_i, z_i, y_i).
inline Permutation perm_all312(const TSet& t) {
  const auto c = cycle_triples(word_of_T(t));
  std::vector<int> p(3 * t.size());
  for (int i = 0; i < t.size(); ++i) detail::write_cycle(p, c.x[i], c.y[i], c.z[i], CycleForm::Form312);
  return Permutation(std::move(p));
}

/// The all-231 mirror; equal to inverse(perm_all312(t)).
inline Permutation perm_all231(const TSet& t) {
  const auto c = cycle_triples(word_of_T(t));
  std::vector<int> p(3 * t.size());
  for (int i = 0; i < t.size(); ++i) detail::write_cycle(p, c.x[i], c.y[i], c.z[i], CycleForm::Form231);
  return Permutation(std::move(p));
}

/// Staircase lattice path over {E, N}: 2n east and n north steps, never
/// above y = x/2. Reading the path backwards, s_i = t_i - i east steps
/// precede the i-th north step.
inline std::string t_to_path(const TSet& t) {
  const int n = t.size();
  std::string reversed;
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    const int s = t[i] - (i + 1);
    reversed.append(s - prev, 'E');
    reversed += 'N';
    prev = s;
  }
  reversed.append(2 * n - prev, 'E');
  return {reversed.rbegin(), reversed.rend()};
}

inline TSet path_to_t(const std::string& path) {
  int east = 0, north = 0;
  for (char ch : path) {
    if (ch == 'E') ++east;
    else if (ch == 'N') ++north;
    else throw std::invalid_argument("lattice path has step outside {E,N}");
    if (2 * north > east) throw std::invalid_argument("lattice path rises above y = x/2: " + path);
  }
  if (north == 0 || east != 2 * north) throw std::invalid_argument("lattice path must end at (2n, n) with n >= 1");
  std::vector<int> t;
  int s = 0;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (*it == 'E') ++s;
    else t.push_back(static_cast<int>(t.size()) + 1 + s);
  }
  return TSet(std::move(t));
}

inline BigInt count_B(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return fuss_catalan(n);
}

/// M = {i : the prefix ending at the i-th y has exactly i x's}; h = |M|.
struct Segments {
  int h = 0;
  std::vector<int> m;
  friend bool operator==(const Segments&, const Segments&) = default;
};

inline Segments h_and_segments(const XYZWord& w) {
  Segments s;
  int cx = 0, cy = 0;
  for (char ch : w.str()) {
    if (ch == 'x') ++cx;
    else if (ch == 'y' && ++cy == cx) s.m.push_back(cy);
  }
  s.h = static_cast<int>(s.m.size());
  return s;
}

/// One form per segment (m_{j-1}, m_j] of cycle indices, m_0 = 0.
struct FormChoice {
  std::vector<std::pair<int, int>> segments;  // (low exclusive, high inclusive)
  std::vector<CycleForm> forms;
  friend bool operator==(const FormChoice&, const FormChoice&) = default;
};

inline std::vector<std::pair<int, int>> segment_intervals(const Segments& s) {
  std::vector<std::pair<int, int>> out;
  int lo = 0;
  for (int hi : s.m) out.emplace_back(lo, hi), lo = hi;
  return out;
}

/// All 2^h choices for T; earlier segments vary slowest, 312 before 231.
inline std::vector<FormChoice> all_form_choices(const TSet& t) {
  const auto seg = segment_intervals(h_and_segments(word_of_T(t)));
  const int h = static_cast<int>(seg.size());
  std::vector<FormChoice> out;
  for (unsigned long mask = 0; mask < (1ul << h); ++mask) {
    FormChoice c{seg, {}};
    for (int j = 0; j < h; ++j)
      c.forms.push_back((mask >> (h - 1 - j)) & 1 ? CycleForm::Form231 : CycleForm::Form312);
    out.push_back(std::move(c));
  }
  return out;
}

/// Uniform-form choice over the segments of T.
inline FormChoice uniform_choice(const TSet& t, CycleForm f) {
  auto seg = segment_intervals(h_and_segments(word_of_T(t)));
  return {seg, std::vector<CycleForm>(seg.size(), f)};
}

/// Cycle i is (x_i, z_i, y_i) in a 312 segment and (x_i, y_i, z_i) in a 231 segment.
inline Permutation perm_from_choices(const TSet& t, const FormChoice& c) {
  const auto w = word_of_T(t);
  if (c.segments != segment_intervals(h_and_segments(w)) || c.forms.size() != c.segments.size())
    throw std::invalid_argument("form choice segments do not match the balanced points of W(T)");
  const auto tri = cycle_triples(w);
  std::vector<int> p(3 * t.size());
  for (std::size_t j = 0; j < c.segments.size(); ++j)
    for (int i = c.segments[j].first + 1; i <= c.segments[j].second; ++i)
      detail::write_cycle(p, tri.x[i - 1], tri.y[i - 1], tri.z[i - 1], c.forms[j]);
  return Permutation(std::move(p));
}

/// Visits Av*_{3n}(321) as (T, choice, permutation) over T-sets in lexicographic order.
template <class Visitor>
void for_each_321(int n, Visitor&& visit) {
  for_each_T(n, [&](const std::vector<int>& tv) {
    TSet t(tv);
    for (const auto& c : all_form_choices(t)) visit(t, c, perm_from_choices(t, c));
  });
}

inline std::vector<Permutation> enumerate_321(int n) {
  std::vector<Permutation> out;
  for_each_321(n, [&](const TSet&, const FormChoice&, Permutation p) { out.push_back(std::move(p)); });
  return out;
}

/// sum over T of 2^h(T).
inline BigInt count_321_via_T(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<std::uint64_t> by_h(n + 1, 0);
  for_each_T(n, [&](const std::vector<int>& tv) { ++by_h[h_and_segments(word_of_T(TSet(tv))).h]; });
  BigInt total = 0;
  for (int h = 0; h <= n; ++h) total += BigInt(by_h[h]) << h;
  return total;
}

struct DyckStats {
  DyckWordXY word;
  int h = 0;
  std::vector<int> r;  // y's between the i-th and (i+1)-st x, i = 1..n-1
  std::vector<int> s;  // x's between the i-th and (i+1)-st y
};

inline DyckStats dyck_stats(const DyckWordXY& d) {
  DyckStats st{d, 0, {}, {}};
  int height = 0;
  for (char ch : d.str()) {
    height += ch == 'x' ? 1 : -1;
    if (height == 0) ++st.h;
  }
  const auto xs = d.open_positions();
  const auto ys = d.close_positions();
  const int n = d.semilength();
  for (int i = 0; i + 1 < n; ++i) {
    st.r.push_back((ys.end() - std::upper_bound(ys.begin(), ys.end(), xs[i])) -
                   (ys.end() - std::upper_bound(ys.begin(), ys.end(), xs[i + 1])));
    st.s.push_back((xs.end() - std::upper_bound(xs.begin(), xs.end(), ys[i])) -
                   (xs.end() - std::upper_bound(xs.begin(), xs.end(), ys[i + 1])));
  }
  return st;
}

/// prod_i C(r_i + s_i, r_i).
inline BigInt fiber_size(const DyckStats& st) {
  BigInt prod = 1;
  for (std::size_t i = 0; i < st.r.size(); ++i) prod *= binomial(st.r[i] + st.s[i], st.r[i]);
  return prod;
}

/// T-sets whose word has x/y-subword d: leading z's, then between the i-th and
/// (i+1)-st x every shuffle of r_i y's with s_i z's. Each candidate is checked
/// against word_of_T.
inline std::vector<TSet> enumerate_T_for_dyck(const DyckWordXY& d) {
  const auto st = dyck_stats(d);
  const int n = d.semilength();
  int leading_zero_r = 0;
  while (leading_zero_r < static_cast<int>(st.r.size()) && st.r[leading_zero_r] == 0) ++leading_zero_r;
  const int lead = 1 + leading_zero_r;
  int tail_y = n;
  for (int r : st.r) tail_y -= r;

  std::vector<TSet> out;
  std::string word(lead, 'z');
  auto rec = [&](auto&& self, int i) -> void {
    // i counts x's written so far.
    if (i == n) {
      std::string full = word + std::string(tail_y, 'y');
      XYZWord w(full);
      TSet t(w.positions('z'));
      if (word_of_T(t) != w) throw std::logic_error("interleaving " + full + " is not W(T) for its own z-set");
      out.push_back(std::move(t));
      return;
    }
    word += 'x';
    if (i + 1 == n) {
      self(self, i + 1);
    } else {
      const int ry = st.r[i], sz = st.s[i];
      std::string gap = std::string(ry, 'y') + std::string(sz, 'z');
      do {
        const auto mark = word.size();
        word += gap;
        self(self, i + 1);
        word.resize(mark);
      } while (std::next_permutation(gap.begin(), gap.end()));
    }
    word.pop_back();
  };
  rec(rec, 0);
  return out;
}

/// f(t) = sum over Dyck words D of t^h(D) prod C(r_i + s_i, r_i); index = degree.
struct HPolynomial {
  std::vector<BigInt> coefficients;

  BigInt operator()(const BigInt& t) const {
    BigInt r = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) r = r * t + *it;
    return r;
  }
};

/// Lowest degree first, space separated.
inline std::string to_string(const HPolynomial& f) {
  std::string s;
  for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
    if (i) s += ' ';
    s += f.coefficients[i].str();
  }
  return s;
}

inline HPolynomial h_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  HPolynomial f{std::vector<BigInt>(n + 1, 0)};
  for (const auto& d : all_dyck_words<DyckWordXY>(n)) {
    const auto st = dyck_stats(d);
    f.coefficients[st.h] += fiber_size(st);
  }
  return f;
}

/// sum over Dyck words of 2^h(D) prod C(r_i + s_i, r_i).
inline BigInt count_321_via_dyck(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  BigInt total = 0;
  for (const auto& d : all_dyck_words<DyckWordXY>(n)) {
    const auto st = dyck_stats(d);
    total += fiber_size(st) << st.h;
  }
  return total;
}

/// f(1) equals the Fuss-Catalan number.
inline bool dyck_identity_check(int n) { return h_polynomial(n)(1) == fuss_catalan(n); }

}  // namespace star3
