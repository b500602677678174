#include "star3/avoid132.hpp"
#include "star3/oracle.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace star3;

namespace {

Permutation P(const char* s) { return parse_one_line(s); }

const char* kPi18 = "18 16 14 15 12 11 6 5 3 4 7 8 2 9 10 13 1 17";

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST(Avoid132, TPartitionExample) {
  const auto t = t_partition(P(kPi18));
  EXPECT_EQ(t.t1, range(1, 6));
  EXPECT_EQ(t.t2, (std::vector<int>{7, 8, 9, 10, 13, 17}));
  EXPECT_EQ(t.t3, (std::vector<int>{11, 12, 14, 15, 16, 18}));
  EXPECT_EQ(dyck_word_of(P(kPi18)).str(), "111122122212");
}

TEST(Avoid132, DyckWordSmall) {
  const auto t = t_partition(P("312"));
  EXPECT_EQ(t.t1, std::vector<int>{1});
  EXPECT_EQ(t.t2, std::vector<int>{2});
  EXPECT_EQ(t.t3, std::vector<int>{3});
  EXPECT_EQ(dyck_word_of(P("312")).str(), "12");
  EXPECT_EQ(dyck_word_of(P("561234")).str(), "1122");
  EXPECT_EQ(dyck_word_of(P("652134")).str(), "1122");
  EXPECT_THROW(t_partition(P("231")), std::invalid_argument);
}

TEST(Avoid132, TypeExamples) {
  EXPECT_EQ(to_string(type_of(DyckWord12("111122122212"))), "2,2,1,1");
  EXPECT_EQ(to_string(type_of(DyckWord12("1122"))), "2");
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(type_of(DyckWord12(std::string(n, '1') + std::string(n, '2'))), Composition({n}));
  EXPECT_THROW(DyckWord12("2112"), std::invalid_argument);
}

TEST(Avoid132, MotzkinExamples) {
  EXPECT_EQ(motzkin_to_dyck11(MotzkinWord("UDF")).str(), "11212212");
  EXPECT_EQ(motzkin_to_dyck11(MotzkinWord("")).str(), "12");
  std::set<std::string> got;
  for (const auto& m : all_motzkin_words(3)) got.insert(motzkin_to_dyck11(m).str());
  EXPECT_EQ(got, (std::set<std::string>{"11212212", "12112122", "11212122", "12121212"}));
  EXPECT_THROW(dyck11_to_motzkin(DyckWord12("1122")), std::invalid_argument);
}

TEST(Avoid132, ExpandContractExamples) {
  EXPECT_EQ(expand_type(DyckWord12("11212212"), Composition({2, 2, 1, 1})).str(), "111122122212");
  EXPECT_EQ(expand_type(DyckWord12("12"), Composition({4})).str(), "11112222");
  EXPECT_EQ(contract_type(DyckWord12("112211122122")).str(), "12112122");
  EXPECT_THROW(expand_type(DyckWord12("12"), Composition({1, 1})), std::invalid_argument);
}

TEST(Avoid132, EnumerateByTypeExamples) {
  std::vector<std::string> got;
  for (const auto& w : enumerate_dyck_of_type(Composition({2, 2, 1, 1}))) got.push_back(w.str());
  std::set<std::string> want{"111122122212", "112211122122", "111122122122", "112211221212"};
  EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), want);
  EXPECT_EQ(got.size(), 4u);
  EXPECT_EQ(enumerate_dyck_of_type(Composition({5})).size(), 1u);
  EXPECT_EQ(enumerate_dyck_of_type(Composition({1, 1, 1})).size(), 2u);
}

TEST(Avoid132, TypesPartitionDyckWords) {
  for (int n = 1; n <= 8; ++n) {
    const auto motz = motzkin_numbers(n);
    std::set<std::string> union_of_types;
    std::size_t total = 0;
    for_each_composition(n, [&](const Composition& x) {
      const auto words = enumerate_dyck_of_type(x);
      EXPECT_EQ(BigInt(words.size()), motz[x.length() - 1]) << to_string(x);
      for (const auto& w : words) {
        EXPECT_EQ(type_of(w), x);
        EXPECT_EQ(expand_type(contract_type(w), x), w);
        union_of_types.insert(w.str());
      }
      total += words.size();
    });
    const auto all = all_dyck_words<DyckWord12>(n);
    EXPECT_EQ(total, all.size());
    EXPECT_EQ(union_of_types.size(), all.size());
    EXPECT_EQ(BigInt(all.size()), catalan_numbers(n)[n]);
  }
}

TEST(Avoid132, MotzkinBijectionRoundTrips) {
  for (int len = 0; len <= 7; ++len) {
    for (const auto& m : all_motzkin_words(len)) EXPECT_EQ(dyck11_to_motzkin(motzkin_to_dyck11(m)).str(), m.str());
    for (const auto& w : all_dyck_words<DyckWord12>(len + 1))
      if (is_all_ones(type_of(w))) {
        EXPECT_EQ(motzkin_to_dyck11(dyck11_to_motzkin(w)), w);
      }
  }
}

TEST(Avoid132, BuildExamples) {
  const DyckWord12 w("111122122212");
  EXPECT_EQ(to_one_line(build_A_perm(w, {P("12"), P("12"), P("1"), P("1")})),
            "18 16 14 15 11 12 5 6 3 4 7 8 2 9 10 13 1 17");
  EXPECT_EQ(to_one_line(build_A_perm(w, {P("21"), P("21"), P("1"), P("1")})),
            "18 16 15 14 12 11 6 5 4 3 7 8 2 9 10 13 1 17");
  EXPECT_EQ(build_A_perm(DyckWord12("12"), {P("1")}), P("312"));
  EXPECT_THROW(build_A_perm(w, {P("12"), P("12"), P("1")}), std::invalid_argument);
  EXPECT_THROW(build_A_perm(DyckWord12("111222"), {P("132")}), std::invalid_argument);
}

TEST(Avoid132, ConstructionEqualsOracle) {
  for (int n = 1; n <= 4; ++n) {
    std::map<std::string, BigInt> fiber;
    std::set<Permutation> built;
    for_each_A(n, [&](const DyckWord12& w, const Permutation& p) {
      ++fiber[w.str()];
      EXPECT_EQ(dyck_word_of(p), w);
      built.insert(p);
    });
    for (const auto& [word, size] : fiber) {
      BigInt expect = 1;
      const auto x_type = type_of(DyckWord12(word));
      for (int x : x_type.parts()) expect *= catalan_numbers(x)[x];
      EXPECT_EQ(size, expect) << word;
    }
    const auto oracle = oracle_enumerate({n, {pattern_132()}, FormFilter::All312});
    EXPECT_EQ(built, std::set<Permutation>(oracle.begin(), oracle.end())) << "n=" << n;
    EXPECT_EQ(BigInt(built.size()), count_A(n));
  }
}

TEST(Avoid132, Counts) {
  EXPECT_EQ(count_A(1), 1);
  EXPECT_EQ(count_A(2), 3);
  EXPECT_EQ(count_A(4), 44);
  EXPECT_EQ(count_132(1), 2);
  EXPECT_EQ(count_132(3), 36);
  EXPECT_EQ(count_132(5), 824);
  EXPECT_EQ(count_A(3), oracle_count({3, {pattern_132()}, FormFilter::All312}));
}
