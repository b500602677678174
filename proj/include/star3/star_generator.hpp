#pragma once

// Direct generation of S*_{3n}, the permutations of [3n] whose cycles are all
// 3-cycles. The smallest unplaced element a is closed into a cycle with two
// partners b < c (lexicographic), orientation a->b->c before a->c->b.

#include "star3/permutation.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <span>
#include <vector>

namespace star3 {

/// Choice of the cycle through 1; the jobs into which a full walk splits.
struct FirstCycle {
  int b = 0;
  int c = 0;
  bool reversed = false;  // false: 1->b->c, true: 1->c->b

  friend bool operator==(const FirstCycle&, const FirstCycle&) = default;
};

/// Passed to the placement hook after each new cycle is written.
struct PlacedCycle {
  std::array<int, 3> elements;  // cycle notation, smallest first
  CycleForm form;
};

inline std::vector<FirstCycle> first_cycle_choices(int n) {
  std::vector<FirstCycle> out;
  const int m = 3 * n;
  for (int b = 2; b <= m; ++b)
    for (int c = b + 1; c <= m; ++c) {
      out.push_back({b, c, false});
      out.push_back({b, c, true});
    }
  return out;
}

namespace detail {

// `slots` is 1-based (index 0 unused); 0 marks an unplaced element.
inline PlacedCycle place_cycle(std::vector<int>& slots, int a, int b, int c, bool reversed) {
  if (!reversed) {
    slots[a] = b, slots[b] = c, slots[c] = a;
    return {{a, b, c}, CycleForm::Form231};
  }
  slots[a] = c, slots[c] = b, slots[b] = a;
  return {{a, c, b}, CycleForm::Form312};
}

inline void clear_cycle(std::vector<int>& slots, int a, int b, int c) { slots[a] = slots[b] = slots[c] = 0; }

template <class OnPlace, class OnLeaf>
void star_recurse(std::vector<int>& slots, int m, OnPlace& on_place, OnLeaf& on_leaf) {
  int a = 1;
  while (a <= m && slots[a] != 0) ++a;
  if (a > m) {
    on_leaf(std::span<const int>(slots.data() + 1, m));
    return;
  }
  for (int b = a + 1; b <= m; ++b) {
    if (slots[b]) continue;
    for (int c = b + 1; c <= m; ++c) {
      if (slots[c]) continue;
      for (bool reversed : {false, true}) {
        PlacedCycle pc = place_cycle(slots, a, b, c, reversed);
        if (on_place(std::span<const int>(slots), pc)) star_recurse(slots, m, on_place, on_leaf);
        clear_cycle(slots, a, b, c);
      }
    }
  }
}

}  // namespace detail

/// Walks S*_{3n} (or the part under `first`). After each cycle is placed,
/// on_place(slots, placed) decides whether to descend; slots is 1-based with 0
/// for unplaced entries. on_leaf receives each complete one-line permutation.
template <class OnPlace, class OnLeaf>
void walk_star(int n, std::optional<FirstCycle> first, OnPlace&& on_place, OnLeaf&& on_leaf) {
  if (n <= 0) return;
  const int m = 3 * n;
  std::vector<int> slots(m + 1, 0);
  if (!first) {
    detail::star_recurse(slots, m, on_place, on_leaf);
    return;
  }
  if (first->b < 2 || first->c <= first->b || first->c > m)
    throw std::invalid_argument("invalid first-cycle choice");
  PlacedCycle pc = detail::place_cycle(slots, 1, first->b, first->c, first->reversed);
  if (on_place(std::span<const int>(slots), pc)) detail::star_recurse(slots, m, on_place, on_leaf);
}

/// Visits every member of S*_{3n} exactly once in generator order.
template <class Visitor>
void for_each_star(int n, Visitor&& visit) {
  walk_star(
      n, std::nullopt, [](std::span<const int>, const PlacedCycle&) { return true; },
      [&](std::span<const int> p) { visit(p); });
}

inline std::vector<Permutation> iterate_star(int n) {
  std::vector<Permutation> out;
  for_each_star(n, [&](std::span<const int> p) { out.emplace_back(std::vector<int>(p.begin(), p.end())); });
  return out;
}

}  // namespace star3
