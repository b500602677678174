#pragma once

// Maps an avoidance query to the closed form or construction that counts it,
// and runs formula-against-oracle checks.

#include "star3/avoid132.hpp"
#include "star3/avoid231.hpp"
#include "star3/avoid321.hpp"
#include "star3/oracle.hpp"
#include "star3/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace star3 {

inline std::string_view to_string(FormFilter f) {
  switch (f) {
    case FormFilter::All: return "all";
    case FormFilter::All312: return "312";
    case FormFilter::All231: return "231";
  }
  return "all";
}

/// Counts from the formula modules, or nullopt when no formula covers the query.
/// Classes without a dedicated formula are reached through inverse and
/// reverse-complement, which swap the forms 312 and 231.
inline std::optional<BigInt> formula_count(const AvoidanceQuery& q, const OracleOptions& opts = {}) {
  q.validate();
  const int n = q.n;
  if (q.patterns.size() == 2) {
    if (q.filter != FormFilter::All) return std::nullopt;
    return closed_form_pair(n, q.patterns[0], q.patterns[1], opts);
  }
  if (q.patterns.size() != 1) return std::nullopt;
  const std::string s = to_compact(q.patterns[0]);
  const auto f = q.filter;
  if (s == "231" || s == "312") {
    // Every cycle of a 231-avoider has form 312, and dually for 312.
    const auto own = s == "231" ? FormFilter::All312 : FormFilter::All231;
    if (f == FormFilter::All || f == own) return count_231(n);
    return BigInt(0);
  }
  if (s == "132" || s == "213") return f == FormFilter::All ? count_132(n) : count_A(n);
  if (s == "321") return f == FormFilter::All ? count_321_via_dyck(n) : count_B(n);
  if (s == "123" && f == FormFilter::All) return closed_form_123(n);
  return std::nullopt;
}

struct CheckLine {
  int n = 0;
  std::optional<BigInt> formula;
  BigInt oracle;
  bool ok() const { return formula && *formula == oracle; }
};

/// formula vs oracle for n = 1..max_n.
inline std::vector<CheckLine> check_against_oracle(const std::vector<Pattern>& patterns, FormFilter filter, int max_n,
                                                   const OracleOptions& opts = {}) {
  std::vector<CheckLine> out;
  for (int n = 1; n <= max_n; ++n) {
    AvoidanceQuery q{n, patterns, filter};
    out.push_back({n, formula_count(q, opts), oracle_count(q, opts)});
  }
  return out;
}

inline std::string pattern_list(const std::vector<Pattern>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ',';
    s += to_compact(ps[i]);
  }
  return s;
}

}  // namespace star3
