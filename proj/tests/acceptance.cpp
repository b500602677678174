// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fail.
//   acceptance [--with-n5] [--only K] [--jobs J]

#include "example_report.hpp"
#include "star3/counts.hpp"

#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace star3;

namespace {

struct Outcome {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) why = what;
    ok = ok && cond;
  }
};

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<std::vector<Pattern>> queries_with_pairs() {
  std::vector<std::vector<Pattern>> qs;
  const auto s3 = all_permutations(3);
  for (const auto& a : s3) qs.push_back({a});
  for (std::size_t i = 0; i < s3.size(); ++i)
    for (std::size_t j = i + 1; j < s3.size(); ++j) qs.push_back({s3[i], s3[j]});
  return qs;
}

Outcome sequence_table() {
  Outcome o;
  std::vector<BigInt> c231, c132, c321, c123;
  for (int n = 1; n <= 5; ++n) {
    c231.push_back(count_231(n));
    c132.push_back(count_132(n));
    c321.push_back(count_321_via_dyck(n));
    c123.push_back(closed_form_123(n));
  }
  o.require(c231 == ints({1, 3, 9, 27, 81}), "count_231 row");
  o.require(c132 == ints({2, 8, 36, 170, 824}), "count_132 row");
  o.require(c321 == ints({2, 10, 60, 388, 2606}), "count_321_via_dyck row");
  o.require(c123 == ints({2, 6, 0, 0, 0}), "closed_form_123 row");
  return o;
}

Outcome oracle_equivalence(int max_n, int jobs) {
  Outcome o;
  int checked = 0;
  OracleOptions opts{jobs};
  for (const auto& ps : queries_with_pairs())
    for (auto f : {FormFilter::All, FormFilter::All312, FormFilter::All231}) {
      if (!formula_count({1, ps, f})) continue;
      for (const auto& line : check_against_oracle(ps, f, max_n, opts)) {
        ++checked;
        o.require(line.ok(), pattern_list(ps) + " class " + std::string(to_string(f)) + " n=" + std::to_string(line.n));
      }
    }
  // the three named subclasses must be among the checked queries
  o.require(formula_count({1, {pattern_132()}, FormFilter::All312}).has_value(), "A subclass has no formula");
  o.require(formula_count({1, {pattern_321()}, FormFilter::All312}).has_value(), "B subclass has no formula");
  o.require(formula_count({1, {pattern_321()}, FormFilter::All231}).has_value(), "C subclass has no formula");
  o.require(checked > 0, "nothing checked");
  return o;
}

Outcome bijection_231() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const auto words = all_elr_words(n - 1);
    std::set<Permutation> image;
    for (const auto& w : words) image.insert(encode(w));
    o.require(image.size() == words.size(), "encode not injective at n=" + std::to_string(n));
    o.require(BigInt(words.size()) == power(3, n - 1), "word count at n=" + std::to_string(n));
    if (n <= 4) {
      const auto oracle = oracle_enumerate({n, {pattern_231()}});
      o.require(image == std::set<Permutation>(oracle.begin(), oracle.end()), "image differs at n=" + std::to_string(n));
    }
  }
  for (int len = 0; len <= 7; ++len)
    for (const auto& w : all_elr_words(len)) o.require(decode(encode(w)) == w, "round trip " + to_string(w));
  return o;
}

Outcome motzkin_machinery() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    const auto motz = motzkin_numbers(n);
    std::set<std::string> covered;
    std::size_t total = 0;
    for_each_composition(n, [&](const Composition& x) {
      const auto words = enumerate_dyck_of_type(x);
      o.require(BigInt(words.size()) == motz[x.length() - 1], "count for type " + to_string(x));
      for (const auto& w : words) {
        o.require(type_of(w) == x, "type of " + w.str());
        o.require(expand_type(contract_type(w), x) == w, "contract/expand " + w.str());
        covered.insert(w.str());
      }
      total += words.size();
    });
    const auto all = all_dyck_words<DyckWord12>(n);
    o.require(total == all.size() && covered.size() == all.size(), "types do not partition at n=" + std::to_string(n));
  }
  for (int len = 0; len <= 7; ++len) {
    for (const auto& m : all_motzkin_words(len))
      o.require(dyck11_to_motzkin(motzkin_to_dyck11(m)) == m, "Motzkin round trip " + m.str());
    for (const auto& w : all_dyck_words<DyckWord12>(len + 1))
      if (is_all_ones(type_of(w))) o.require(motzkin_to_dyck11(dyck11_to_motzkin(w)) == w, "Dyck round trip " + w.str());
  }
  return o;
}

Outcome catalan_fill_construction() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    std::map<std::string, BigInt> fiber;
    std::set<Permutation> built;
    for_each_A(n, [&](const DyckWord12& w, const Permutation& p) {
      ++fiber[w.str()];
      built.insert(p);
    });
    for (const auto& [word, size] : fiber) {
      BigInt expect = 1;
      const auto x_type = type_of(DyckWord12(word));
      for (int x : x_type.parts()) expect *= catalan_numbers(x)[x];
      o.require(size == expect, "fiber of " + word);
    }
    o.require(fiber.size() == all_dyck_words<DyckWord12>(n).size(), "some Dyck word has an empty fiber");
    const auto oracle = oracle_enumerate({n, {pattern_132()}, FormFilter::All312});
    o.require(built == std::set<Permutation>(oracle.begin(), oracle.end()), "A set differs at n=" + std::to_string(n));
  }
  return o;
}

Outcome generating_functions() {
  Outcome o;
  const int N = 20;
  const auto a = series_A(N), b = series_B(N);
  for (int n = 1; n <= N; ++n) {
    o.require(a[n] == count_A(n), "A coefficient " + std::to_string(n));
    o.require(b[n] == count_132(n), "B coefficient " + std::to_string(n));
  }
  for (int n = 1; n <= 4; ++n) {
    o.require(a[n] == oracle_count({n, {pattern_132()}, FormFilter::All312}), "A vs oracle " + std::to_string(n));
    o.require(b[n] == oracle_count({n, {pattern_132()}}), "B vs oracle " + std::to_string(n));
  }
  o.require(series_mul(b, series_sub(IntegerSeries::constant(1, N), a)) == series_scale(a, 2), "B(1-A) != 2A");
  return o;
}

Outcome weighted_321() {
  Outcome o;
  for (int n = 1; n <= 10; ++n) {
    const auto d = count_321_via_dyck(n);
    o.require(d == count_321_via_T(n), "via T at n=" + std::to_string(n));
    o.require(d == h_polynomial(n)(2), "f(2) at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 12; ++n) o.require(dyck_identity_check(n), "f(1) at n=" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) {
    std::set<Permutation> seen;
    std::size_t produced = 0;
    BigInt expected = 0;
    for (const auto& t : enumerate_T(n)) {
      expected += BigInt(1) << h_and_segments(word_of_T(t)).h;
      for (const auto& c : all_form_choices(t)) {
        const auto p = perm_from_choices(t, c);
        o.require(avoids(p, pattern_321()), "contains 321: " + to_one_line(p));
        seen.insert(p);
        ++produced;
      }
    }
    o.require(seen.size() == produced, "duplicates at n=" + std::to_string(n));
    o.require(BigInt(produced) == expected, "total is not sum of 2^h at n=" + std::to_string(n));
  }
  return o;
}

Outcome worked_examples() {
  Outcome o;
  std::ifstream in(STAR3_GOLDEN_DIR "/worked_examples.txt", std::ios::binary);
  std::ostringstream golden;
  golden << in.rdbuf();
  o.require(!golden.str().empty(), "golden file missing");
  o.require(star3::testing::worked_examples_report() == golden.str(), "report differs from golden file");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool with_n5 = false;
  int only = 0, jobs = 1;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--with-n5")) with_n5 = true;
    else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) jobs = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: acceptance [--with-n5] [--only K] [--jobs J]\n";
      return 2;
    }
  }

  struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const int max_n2 = with_n5 ? 5 : 4;
  const std::vector<Criterion> criteria = {
      {1, "sequence table n=1..5", 10, sequence_table},
      {2, "formula = oracle for n<=" + std::to_string(max_n2), with_n5 ? 300.0 : 120.0,
       [&] { return oracle_equivalence(max_n2, jobs); }},
      {3, "231 bijection", 1e9, bijection_231},
      {4, "Motzkin/type machinery n<=8", 1e9, motzkin_machinery},
      {5, "Catalan-fill construction of A_3n, n<=4", 1e9, catalan_fill_construction},
      {6, "generating functions to order 20", 5, generating_functions},
      {7, "321 weighted sums", 60, weighted_321},
      {8, "worked examples byte-exact", 1e9, worked_examples},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_s) {
      o.ok = false;
      o.why = "over time budget";
    }
    all = all && o.ok;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << secs << " s)";
    if (!o.ok) line << " -- " << o.why;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
