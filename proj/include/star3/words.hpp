#pragma once

// Balanced words and compositions shared by the 132 and 321 constructions.

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace star3 {

/// Dyck word over a two-letter alphabet: every prefix has at least as many
/// `Open` as `Close` letters, and the totals agree.
template <char Open, char Close>
class DyckWord {
 public:
  static constexpr char open = Open;
  static constexpr char close = Close;

  DyckWord() = default;

  explicit DyckWord(std::string letters) : letters_(std::move(letters)) {
    int height = 0;
    for (char ch : letters_) {
      if (ch == Open) ++height;
      else if (ch == Close) --height;
      else throw std::invalid_argument(std::string("Dyck word has letter outside {") + Open + "," + Close + "}");
      if (height < 0) throw std::invalid_argument("not a Dyck word: prefix closes more than it opens: " + letters_);
    }
    if (height != 0) throw std::invalid_argument("not a Dyck word: unbalanced: " + letters_);
  }

  const std::string& str() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  int semilength() const { return size() / 2; }
  char operator[](int i) const { return letters_[i]; }

  /// 1-based positions of Open / Close letters.
  std::vector<int> open_positions() const { return positions(Open); }
  std::vector<int> close_positions() const { return positions(Close); }

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend auto operator<=>(const DyckWord& a, const DyckWord& b) { return a.letters_ <=> b.letters_; }
  friend std::ostream& operator<<(std::ostream& os, const DyckWord& w) { return os << w.letters_; }

 private:
  std::vector<int> positions(char c) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (letters_[i] == c) out.push_back(i + 1);
    return out;
  }

  std::string letters_;
};

using DyckWord12 = DyckWord<'1', '2'>;
using DyckWordXY = DyckWord<'x', 'y'>;

/// Every Dyck word of semilength n, in lexicographic order (Open before Close).
template <class Word>
std::vector<Word> all_dyck_words(int n) {
  std::vector<Word> out;
  std::string buf;
  auto rec = [&](auto&& self, int opens, int closes) -> void {
    if (opens == n && closes == n) {
      out.emplace_back(buf);
      return;
    }
    if (opens < n) {
      buf.push_back(Word::open);
      self(self, opens + 1, closes);
      buf.pop_back();
    }
    if (closes < opens) {
      buf.push_back(Word::close);
      self(self, opens, closes + 1);
      buf.pop_back();
    }
  };
  if (n >= 0) rec(rec, 0, 0);
  return out;
}

/// Word over {U, F, D} with nonnegative prefix heights ending at height 0.
class MotzkinWord {
 public:
  MotzkinWord() = default;

  explicit MotzkinWord(std::string letters) : letters_(std::move(letters)) {
    int height = 0;
    for (char ch : letters_) {
      if (ch == 'U') ++height;
      else if (ch == 'D') --height;
      else if (ch != 'F') throw std::invalid_argument("Motzkin word has letter outside {U,F,D}");
      if (height < 0) throw std::invalid_argument("not a Motzkin word: " + letters_);
    }
    if (height != 0) throw std::invalid_argument("not a Motzkin word: unbalanced: " + letters_);
  }

  const std::string& str() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  char operator[](int i) const { return letters_[i]; }

  friend bool operator==(const MotzkinWord&, const MotzkinWord&) = default;
  friend auto operator<=>(const MotzkinWord& a, const MotzkinWord& b) { return a.letters_ <=> b.letters_; }

 private:
  std::string letters_;
};

/// All Motzkin words of the given length, letters tried in the order U, F, D.
inline std::vector<MotzkinWord> all_motzkin_words(int length) {
  std::vector<MotzkinWord> out;
  std::string buf;
  auto rec = [&](auto&& self, int height) -> void {
    const int left = length - static_cast<int>(buf.size());
    if (left == 0) {
      if (height == 0) out.emplace_back(buf);
      return;
    }
    if (height + 1 <= left - 1) {
      buf.push_back('U');
      self(self, height + 1);
      buf.pop_back();
    }
    if (height <= left - 1) {
      buf.push_back('F');
      self(self, height);
      buf.pop_back();
    }
    if (height > 0) {
      buf.push_back('D');
      self(self, height - 1);
      buf.pop_back();
    }
  };
  if (length >= 0) rec(rec, 0);
  return out;
}

/// Ordered tuple of positive parts.
class Composition {
 public:
  Composition() = default;

  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
      if (x < 1) throw std::invalid_argument("composition parts must be positive");
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](int i) const { return parts_[i]; }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// "2,2,1,1".
inline std::string to_string(const Composition& c) {
  std::string s;
  for (int i = 0; i < c.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

inline Composition parse_composition(std::string_view text) {
  std::vector<int> parts;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) throw std::invalid_argument("empty composition part");
    parts.push_back(std::stoi(tok));
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ',') flush();
    else if (ch >= '0' && ch <= '9') tok += ch;
    else if (ch != ' ') throw std::invalid_argument("bad character in composition");
  }
  flush();
  return Composition(std::move(parts));
}

/// Visits the compositions of n (all lengths) in lexicographic order.
template <class Visitor>
void for_each_composition(int n, Visitor&& visit) {
  std::vector<int> parts;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      visit(Composition(parts));
      return;
    }
    for (int x = 1; x <= left; ++x) {
      parts.push_back(x);
      self(self, left - x);
      parts.pop_back();
    }
  };
  if (n >= 1) rec(rec, n);
}

}  // namespace star3
