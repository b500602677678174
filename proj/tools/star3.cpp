// star3: counting, enumeration and verification for pattern-avoiding
// permutations composed only of 3-cycles.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource refusal.

#include "star3/counts.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace star3;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 1, hi = 1;
};

Range parse_range(const std::string& s) {
  try {
    auto dots = s.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      int v = std::stoi(s, &used);
      if (used != s.size()) throw UsageError("bad n: " + s);
      return {v, v};
    }
    int lo = std::stoi(s.substr(0, dots), &used);
    if (used != dots) throw UsageError("bad n range: " + s);
    int hi = std::stoi(s.substr(dots + 2), &used);
    if (used != s.size() - dots - 2) throw UsageError("bad n range: " + s);
    if (lo > hi) throw UsageError("empty n range: " + s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad n range: " + s);
  }
}

std::vector<Pattern> parse_patterns(const std::string& s) {
  std::vector<Pattern> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() != 3) throw UsageError("pattern must be a permutation of 123: '" + tok + "'");
    try {
      out.push_back(parse_one_line(tok));
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown pattern '" + tok + "'");
    }
  }
  if (out.empty() || out.size() > 2) throw UsageError("give one pattern or a comma-separated pair");
  if (out.size() == 2 && out[0] == out[1]) throw UsageError("pair contains the same pattern twice");
  return out;
}

FormFilter parse_class(const std::string& s) {
  if (s == "all") return FormFilter::All;
  if (s == "312") return FormFilter::All312;
  if (s == "231") return FormFilter::All231;
  throw UsageError("class must be all, 312 or 231");
}

std::string json_record(int n, const Permutation& p) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["perm"] = p.vector();
  j["cycles"] = to_cycle_string(p);
  return j.dump();
}

struct Common {
  std::string pattern;
  std::string cls = "all";
  std::string format = "text";
  int jobs = 1;
  bool allow_large = false;

  OracleOptions oracle() const { return {jobs, allow_large, OracleStrategy::Prune}; }
};

int run_count(const Common& c, const std::string& n_text, const std::string& method) {
  const auto patterns = parse_patterns(c.pattern);
  const auto filter = parse_class(c.cls);
  const auto range = parse_range(n_text);
  if (range.lo < 1) throw UsageError("n must be at least 1");
  std::vector<std::pair<int, BigInt>> rows;
  for (int n = range.lo; n <= range.hi; ++n) {
    AvoidanceQuery q{n, patterns, filter};
    std::optional<BigInt> v;
    if (method != "oracle") v = formula_count(q, c.oracle());
    if (!v) {
      if (method == "formula") throw UsageError("no formula for patterns " + pattern_list(patterns) + " class " + c.cls);
      v = oracle_count(q, c.oracle());
    }
    rows.emplace_back(n, *v);
  }
  if (c.format == "text") {
    for (std::size_t i = 0; i < rows.size(); ++i) std::cout << (i ? " " : "") << rows[i].second;
    std::cout << "\n";
  } else if (c.format == "bfile") {
    for (const auto& [n, v] : rows) std::cout << n << " " << v << "\n";
  } else {
    for (const auto& [n, v] : rows) {
      nlohmann::ordered_json j;
      j["n"] = n;
      j["patterns"] = nlohmann::json::array();
      for (const auto& p : patterns) j["patterns"].push_back(to_compact(p));
      j["class"] = std::string(to_string(filter));
      j["count"] = v.str();
      std::cout << j.dump() << "\n";
    }
  }
  return kExitOk;
}

int run_enumerate(const Common& c, int n, const std::string& source) {
  const auto patterns = parse_patterns(c.pattern);
  const auto filter = parse_class(c.cls);
  if (n < 1) throw UsageError("n must be at least 1");
  std::vector<Permutation> perms;
  if (source == "oracle") {
    perms = oracle_enumerate(AvoidanceQuery{n, patterns, filter}, c.oracle());
  } else {
    const std::string key = patterns.size() == 1 ? to_compact(patterns[0]) : "";
    if (key == "231" && filter != FormFilter::All231) {
      for (const auto& w : all_elr_words(n - 1)) perms.push_back(encode(w));
    } else if (key == "132" && filter == FormFilter::All312) {
      perms = enumerate_A(n);
    } else if (key == "321" && filter == FormFilter::All) {
      perms = enumerate_321(n);
    } else if (key == "321" && filter == FormFilter::All312) {
      for (const auto& t : enumerate_T(n)) perms.push_back(perm_all312(t));
    } else if (key == "321" && filter == FormFilter::All231) {
      for (const auto& t : enumerate_T(n)) perms.push_back(perm_all231(t));
    } else {
      throw UsageError("no construction for patterns " + pattern_list(patterns) + " class " + c.cls +
                       " (use --source oracle)");
    }
  }
  for (const auto& p : perms) std::cout << (c.format == "jsonl" ? json_record(n, p) : to_one_line(p)) << "\n";
  return kExitOk;
}

struct Verifier {
  bool all_ok = true;

  void line(bool ok, const std::string& what) {
    all_ok = all_ok && ok;
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
  }

  void formula_vs_oracle(const std::vector<Pattern>& ps, FormFilter f, int max_n, const OracleOptions& opts) {
    const auto rows = check_against_oracle(ps, f, max_n, opts);
    bool ok = true;
    std::string detail;
    for (const auto& r : rows) {
      if (!r.ok()) {
        ok = false;
        detail += " n=" + std::to_string(r.n) + " formula=" + (r.formula ? r.formula->str() : "none") +
                  " oracle=" + r.oracle.str();
      }
    }
    std::string what = pattern_list(ps) + " class " + std::string(to_string(f)) + ": ";
    what += ok ? "formula=oracle for n=1.." + std::to_string(max_n) : "mismatch" + detail;
    line(ok, what);
  }

  void identities(int max_n) {
    {
      const int N = 20;
      const auto a = series_A(N), b = series_B(N);
      const auto lhs = series_mul(b, series_sub(IntegerSeries::constant(1, N), a));
      bool ok = lhs == series_scale(a, 2);
      for (int n = 1; n <= N && ok; ++n) ok = a[n] == count_A(n) && b[n] == count_132(n);
      line(ok, "series A, B match composition sums and B(1-A)=2A to order " + std::to_string(N));
    }
    {
      bool ok = true;
      for (int n = 1; n <= 12 && ok; ++n) ok = dyck_identity_check(n);
      line(ok, "f(1) = Fuss-Catalan for n=1..12");
    }
    {
      const int top = std::max(max_n, 8);
      bool ok = true;
      for (int n = 1; n <= top && ok; ++n) {
        const auto via_dyck = count_321_via_dyck(n);
        ok = via_dyck == count_321_via_T(n) && via_dyck == h_polynomial(n)(2);
      }
      line(ok, "321: sum over T = sum over Dyck words = f(2) for n=1.." + std::to_string(top));
    }
    {
      bool ok = true;
      for (int n = 1; n <= std::max(max_n, 5) && ok; ++n) {
        std::set<Permutation> image;
        for (const auto& w : all_elr_words(n - 1)) {
          auto p = encode(w);
          ok = ok && decode(p) == w;
          image.insert(std::move(p));
        }
        ok = ok && BigInt(image.size()) == count_231(n);
      }
      line(ok, "231 words: encode injective and decode(encode(w)) = w for n=1.." + std::to_string(std::max(max_n, 5)));
    }
  }
};

int run_verify(const Common& c, int max_n, bool pattern_given) {
  if (max_n < 1) throw UsageError("max-n must be at least 1");
  check_oracle_limits(max_n, c.oracle());
  Verifier v;
  if (pattern_given) {
    v.formula_vs_oracle(parse_patterns(c.pattern), parse_class(c.cls), max_n, c.oracle());
  } else {
    const auto s3 = all_permutations(3);
    for (const auto& p : s3)
      for (auto f : {FormFilter::All, FormFilter::All312, FormFilter::All231})
        if (formula_count(AvoidanceQuery{1, {p}, f})) v.formula_vs_oracle({p}, f, max_n, c.oracle());
    for (std::size_t i = 0; i < s3.size(); ++i)
      for (std::size_t j = i + 1; j < s3.size(); ++j)
        v.formula_vs_oracle({s3[i], s3[j]}, FormFilter::All, max_n, c.oracle());
    v.identities(max_n);
  }
  return v.all_ok ? kExitOk : kExitVerifyFailed;
}

int run_series(const std::string& which, int order, const std::string& format) {
  if (order < 0) throw UsageError("order must be non-negative");
  IntegerSeries s;
  if (which == "A" || which == "B") {
    if (order < 1) throw UsageError("order must be at least 1 for A and B");
    s = which == "A" ? series_A(order) : series_B(order);
  } else if (which == "catalan") {
    s = catalan_series(order);
  } else if (which == "motzkin") {
    s = motzkin_series(order);
  } else {
    throw UsageError("series must be one of A, B, catalan, motzkin");
  }
  if (format == "json") std::cout << format_series_json(s) << "\n";
  else if (format == "bfile") for (int i = 0; i <= s.order(); ++i) std::cout << i << " " << s[i] << "\n";
  else std::cout << format_series_lines(s);
  return kExitOk;
}

int run_paths(int n, const std::string& t_text, const std::string& path) {
  if (!t_text.empty()) {
    std::vector<int> t;
    std::stringstream ss(t_text);
    for (std::string tok; ss >> tok;) t.push_back(std::stoi(tok));
    std::cout << t_to_path(TSet(t)) << "\n";
  } else if (!path.empty()) {
    std::cout << to_string(path_to_t(path)) << "\n";
  } else {
    if (n < 1) throw UsageError("paths needs --n, --t or --path");
    for (const auto& t : enumerate_T(n)) std::cout << to_string(t) << " " << t_to_path(t) << "\n";
  }
  return kExitOk;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported format '" + format + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern avoidance in permutations composed only of 3-cycles"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool pattern_required) {
    auto* opt = sub->add_option("--pattern", common.pattern, "pattern such as 321, or a pair 132,213");
    if (pattern_required) opt->required();
    sub->add_option("--class", common.cls, "cycle-form restriction: all, 312 or 231");
    sub->add_option("--jobs", common.jobs, "worker threads for oracle counting")->check(CLI::PositiveNumber);
    sub->add_flag("--allow-large", common.allow_large, "lift the oracle soft limit");
  };

  std::string n_text, method = "auto";
  auto* count = app.add_subcommand("count", "count avoiders for one n or a range a..b");
  add_common(count, true);
  count->add_option("--n", n_text, "n or a..b")->required();
  count->add_option("--method", method, "auto, formula or oracle");
  count->add_option("--format", common.format, "text, jsonl or bfile");

  int n = 0;
  std::string source = "oracle";
  auto* enumerate = app.add_subcommand("enumerate", "list avoiders in one-line notation");
  add_common(enumerate, true);
  enumerate->add_option("--n", n, "n")->required();
  enumerate->add_option("--source", source, "oracle or construction");
  enumerate->add_option("--format", common.format, "text or jsonl");

  int max_n = 4;
  auto* verify = app.add_subcommand("verify", "compare formulas with the oracle and run identity checks");
  add_common(verify, false);
  verify->add_option("--max-n", max_n, "largest n checked");

  std::string which = "B";
  int order = 10;
  auto* series = app.add_subcommand("series", "generating-function coefficients");
  series->add_option("--which", which, "A, B, catalan or motzkin");
  series->add_option("--order", order, "truncation order");
  series->add_option("--format", common.format, "text, json or bfile");

  std::string word;
  auto* enc = app.add_subcommand("encode", "ELR word to 231-avoider");
  enc->add_option("--word", word, "word over E, L, R")->required();
  enc->add_option("--pattern", common.pattern, "only 231");

  std::string perm_text;
  auto* dec = app.add_subcommand("decode", "231-avoider to ELR word");
  dec->add_option("--perm", perm_text, "one-line permutation")->required();
  dec->add_option("--pattern", common.pattern, "only 231");

  int hp_n = 0;
  auto* hpoly = app.add_subcommand("hpoly", "coefficients of f(t), lowest degree first");
  hpoly->add_option("--n", hp_n, "semilength")->required();
  hpoly->add_option("--format", common.format, "text or json");

  int paths_n = 0;
  std::string t_text, path_text;
  auto* paths = app.add_subcommand("paths", "T-sets and their staircase lattice paths");
  paths->add_option("--n", paths_n, "list all for this n");
  paths->add_option("--t", t_text, "convert one T-set, e.g. \"1 4\"");
  paths->add_option("--path", path_text, "convert one path over E, N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) {
      check_format(common.format, {"text", "jsonl", "bfile"});
      if (method != "auto" && method != "formula" && method != "oracle") throw UsageError("bad --method");
      return run_count(common, n_text, method);
    }
    if (*enumerate) {
      check_format(common.format, {"text", "jsonl"});
      if (source != "oracle" && source != "construction") throw UsageError("bad --source");
      return run_enumerate(common, n, source);
    }
    if (*verify) return run_verify(common, max_n, !common.pattern.empty());
    if (*series) {
      check_format(common.format, {"text", "json", "bfile"});
      return run_series(which, order, common.format);
    }
    if (*enc || *dec) {
      if (!common.pattern.empty() && common.pattern != "231") throw UsageError("encode/decode support only --pattern 231");
      if (*enc) std::cout << to_one_line(encode(parse_elr_word(word))) << "\n";
      else std::cout << to_string(decode(parse_one_line(perm_text))) << "\n";
      return kExitOk;
    }
    if (*hpoly) {
      check_format(common.format, {"text", "json"});
      if (hp_n < 1) throw UsageError("n must be at least 1");
      const auto f = h_polynomial(hp_n);
      if (common.format == "json") {
        std::vector<std::string> cs;
        for (const auto& c : f.coefficients) cs.push_back(c.str());
        std::cout << nlohmann::json(cs).dump() << "\n";
      } else {
        std::cout << to_string(f) << "\n";
      }
      return kExitOk;
    }
    if (*paths) return run_paths(paths_n, t_text, path_text);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
