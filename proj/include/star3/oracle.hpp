#pragma once

// Brute-force ground truth for Av*_{3n}(patterns): every member of S*_{3n} is
// generated directly and tested. The default strategy prunes a branch as soon
// as the cycles placed so far already contain a forbidden pattern; the plain
// strategy filters complete permutations only.

#include "star3/bigint.hpp"
#include "star3/permutation.hpp"
#include "star3/star_generator.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace star3 {

enum class FormFilter { All, All312, All231 };

struct AvoidanceQuery {
  int n = 1;
  std::vector<Pattern> patterns;
  FormFilter filter = FormFilter::All;

  void validate() const {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (patterns.empty()) throw std::invalid_argument("at least one pattern is required");
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (patterns[i].size() != 3) throw std::invalid_argument("patterns must have length 3");
      for (std::size_t j = 0; j < i; ++j)
        if (patterns[i] == patterns[j]) throw std::invalid_argument("duplicate pattern " + to_compact(patterns[i]));
    }
  }
};

inline constexpr int kOracleSoftLimit = 5;
inline constexpr int kOracleHardLimit = 8;

class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, int bound) : std::runtime_error(what), bound_(bound) {}
  int bound() const { return bound_; }

 private:
  int bound_;
};

enum class OracleStrategy { Prune, Filter };

struct OracleOptions {
  int jobs = 1;
  bool allow_large = false;  // lifts the soft limit, never the hard one
  OracleStrategy strategy = OracleStrategy::Prune;
};

inline void check_oracle_limits(int n, const OracleOptions& opts) {
  if (n > kOracleHardLimit)
    throw ResourceLimitError("n=" + std::to_string(n) + " exceeds the oracle hard bound n<=" +
                                 std::to_string(kOracleHardLimit),
                             kOracleHardLimit);
  if (n > kOracleSoftLimit && !opts.allow_large)
    throw ResourceLimitError("n=" + std::to_string(n) + " exceeds the oracle soft limit n<=" +
                                 std::to_string(kOracleSoftLimit) + " (override to run anyway)",
                             kOracleSoftLimit);
}

namespace detail {

// Relative-order code of a triple (p, q, r) read left to right.
inline int order_code(int p, int q, int r) { return (p < q) << 2 | (p < r) << 1 | (q < r); }

inline unsigned forbidden_codes(const std::vector<Pattern>& patterns) {
  unsigned mask = 0;
  for (const auto& s : patterns) mask |= 1u << order_code(s(1), s(2), s(3));
  return mask;
}

inline bool form_allowed(CycleForm f, FormFilter filter) {
  switch (filter) {
    case FormFilter::All: return true;
    case FormFilter::All312: return f == CycleForm::Form312;
    case FormFilter::All231: return f == CycleForm::Form231;
  }
  return true;
}

// True iff the assigned entries contain a forbidden triple that uses one of
// the just-placed positions. Earlier triples were checked when placed.
inline bool new_occurrence(std::span<const int> slots, const PlacedCycle& pc, unsigned forbidden) {
  const int m = static_cast<int>(slots.size()) - 1;
  int assigned[64];
  int count = 0;
  for (int i = 1; i <= m; ++i)
    if (slots[i]) assigned[count++] = i;
  for (int p : pc.elements) {
    const int vp = slots[p];
    for (int x = 0; x < count; ++x) {
      const int q = assigned[x];
      if (q == p) continue;
      for (int y = x + 1; y < count; ++y) {
        const int r = assigned[y];
        if (r == p) continue;
        int code;
        if (p < q) code = order_code(vp, slots[q], slots[r]);
        else if (p < r) code = order_code(slots[q], vp, slots[r]);
        else code = order_code(slots[q], slots[r], vp);
        if (forbidden >> code & 1u) return true;
      }
    }
  }
  return false;
}

inline bool leaf_matches(std::span<const int> p, const AvoidanceQuery& q) {
  for (const auto& s : q.patterns)
    if (contains_pattern(p, s.values())) return false;
  if (q.filter == FormFilter::All) return true;
  auto d = cycle_decomposition(Permutation(std::vector<int>(p.begin(), p.end())));
  return std::all_of(d.forms.begin(), d.forms.end(), [&](CycleForm f) { return form_allowed(f, q.filter); });
}

template <class OnMember>
void oracle_walk(const AvoidanceQuery& q, std::optional<FirstCycle> first, OracleStrategy strategy,
                 OnMember&& on_member) {
  if (strategy == OracleStrategy::Filter) {
    walk_star(
        q.n, first, [](std::span<const int>, const PlacedCycle&) { return true; },
        [&](std::span<const int> p) {
          if (leaf_matches(p, q)) on_member(p);
        });
    return;
  }
  const unsigned forbidden = forbidden_codes(q.patterns);
  walk_star(
      q.n, first,
      [&](std::span<const int> slots, const PlacedCycle& pc) {
        return form_allowed(pc.form, q.filter) && !new_occurrence(slots, pc, forbidden);
      },
      [&](std::span<const int> p) { on_member(p); });
}

}  // namespace detail

/// Streams every member of the query class in generator order.
template <class Visitor>
void oracle_enumerate(const AvoidanceQuery& q, const OracleOptions& opts, Visitor&& visit) {
  q.validate();
  check_oracle_limits(q.n, opts);
  detail::oracle_walk(q, std::nullopt, opts.strategy, [&](std::span<const int> p) { visit(p); });
}

inline std::vector<Permutation> oracle_enumerate(const AvoidanceQuery& q, const OracleOptions& opts = {}) {
  std::vector<Permutation> out;
  oracle_enumerate(q, opts, [&](std::span<const int> p) { out.emplace_back(std::vector<int>(p.begin(), p.end())); });
  return out;
}

/// Cardinality of the query class. Work is split by the choice of the cycle
/// through 1; per-job counts are summed in job order.
inline BigInt oracle_count(const AvoidanceQuery& q, const OracleOptions& opts = {}) {
  q.validate();
  check_oracle_limits(q.n, opts);
  const auto jobs = first_cycle_choices(q.n);
  std::vector<std::uint64_t> partial(jobs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      std::uint64_t c = 0;
      detail::oracle_walk(q, jobs[j], opts.strategy, [&](std::span<const int>) { ++c; });
      partial[j] = c;
    }
  };
  const int workers = std::max(1, std::min<int>(opts.jobs, static_cast<int>(jobs.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  BigInt total = 0;
  for (auto c : partial) total += c;
  return total;
}

inline BigInt closed_form_123(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n == 1) return 2;
  if (n == 2) return 6;
  return 0;
}

/// sigma, sigma^-1, sigma^rc, (sigma^-1)^rc; the group applied to a pair acts on both.
inline std::vector<std::pair<Pattern, Pattern>> symmetry_images(const Pattern& a, const Pattern& b) {
  auto sorted = [](Pattern x, Pattern y) { return x < y ? std::pair{x, y} : std::pair{y, x}; };
  return {sorted(a, b), sorted(inverse(a), inverse(b)), sorted(reverse_complement(a), reverse_complement(b)),
          sorted(reverse_complement(inverse(a)), reverse_complement(inverse(b)))};
}

inline std::pair<Pattern, Pattern> canonical_pair(const Pattern& a, const Pattern& b) {
  auto images = symmetry_images(a, b);
  return *std::min_element(images.begin(), images.end());
}

/// Closed form for pairs of length-3 patterns when n > 2; small n is counted.
inline BigInt closed_form_pair(int n, const Pattern& a, const Pattern& b, const OracleOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (a.size() != 3 || b.size() != 3) throw std::invalid_argument("patterns must have length 3");
  if (a == b) throw std::invalid_argument("pair must contain two distinct patterns");
  if (n <= 2) return oracle_count(AvoidanceQuery{n, {a, b}, FormFilter::All}, opts);
  const auto rep = canonical_pair(a, b);
  const std::string key = to_compact(rep.first) + "," + to_compact(rep.second);
  if (key == "132,213" || key == "132,321") return 2;
  if (key == "132,231" || key == "231,321") return 1;
  return 0;
}

}  // namespace star3
