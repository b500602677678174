#include "star3/avoid132.hpp"
#include "star3/oracle.hpp"
#include "star3/series.hpp"

#include <gtest/gtest.h>

using namespace star3;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Numbers, Catalan) {
  EXPECT_EQ(catalan_numbers(5), ints({1, 1, 2, 5, 14, 42}));
  EXPECT_EQ(catalan_numbers(0), ints({1}));
  for (int n = 0; n <= 25; ++n) EXPECT_EQ(catalan_numbers(25)[n], binomial(2 * n, n) / (n + 1));
}

TEST(Numbers, Motzkin) {
  EXPECT_EQ(motzkin_numbers(5), ints({1, 1, 2, 4, 9, 21}));
  EXPECT_EQ(motzkin_numbers(0), ints({1}));
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(BigInt(all_motzkin_words(n).size()), motzkin_numbers(10)[n]);
}

TEST(Series, Arithmetic) {
  const auto c1 = series_sub(catalan_series(6), IntegerSeries::constant(1, 6));
  const auto sq = series_mul(c1, c1);
  EXPECT_EQ(sq[0], 0);
  EXPECT_EQ(sq[1], 0);
  EXPECT_EQ(sq[2], 1);
  EXPECT_EQ(sq[3], 4);  // 2*C1*C2
  const auto geo = series_div(IntegerSeries::constant(1, 8), series_sub(IntegerSeries::constant(1, 8), IntegerSeries::x(8)));
  for (int i = 0; i <= 8; ++i) EXPECT_EQ(geo[i], 1);
  EXPECT_THROW(series_compose(catalan_series(4), catalan_series(4)), std::invalid_argument);
  EXPECT_THROW(series_div(IntegerSeries::constant(1, 3), IntegerSeries::constant(2, 3)), std::invalid_argument);
  EXPECT_EQ(series_add(IntegerSeries::x(3), IntegerSeries::x(5)).order(), 3);
}

TEST(Series, ComposeAgreesWithDirectPowers) {
  const int N = 10;
  const auto c1 = series_sub(catalan_series(N), IntegerSeries::constant(1, N));
  const auto m = motzkin_series(N);
  auto expect = IntegerSeries::zero(N);
  auto pw = IntegerSeries::constant(1, N);
  for (int k = 0; k <= N; ++k) {
    expect = series_add(expect, series_scale(pw, m[k]));
    pw = series_mul(pw, c1);
  }
  EXPECT_EQ(series_compose(m, c1), expect);
}

TEST(Series, NamedExamples) {
  EXPECT_EQ(series_A(4).coefficients(), ints({0, 1, 3, 11, 44}));
  EXPECT_EQ(series_B(5).coefficients(), ints({0, 2, 8, 36, 170, 824}));
  EXPECT_EQ(series_B(1).coefficients(), ints({0, 2}));
  EXPECT_THROW(series_A(0), std::invalid_argument);
}

TEST(Series, MatchCombinatorialSums) {
  const int N = 20;
  const auto a = series_A(N), b = series_B(N);
  for (int n = 1; n <= N; ++n) {
    EXPECT_EQ(a[n], count_A(n)) << n;
    EXPECT_EQ(b[n], count_132(n)) << n;
  }
}

TEST(Series, FunctionalEquation) {
  for (int N : {1, 5, 20, 40}) {
    const auto a = series_A(N), b = series_B(N);
    EXPECT_EQ(series_mul(b, series_sub(IntegerSeries::constant(1, N), a)), series_scale(a, 2)) << N;
  }
}

TEST(Series, MatchOracle) {
  const auto a = series_A(4), b = series_B(4);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(a[n], oracle_count({n, {pattern_132()}, FormFilter::All312}));
    EXPECT_EQ(b[n], oracle_count({n, {pattern_132()}}));
  }
}

TEST(Series, Formatting) {
  EXPECT_EQ(format_series_lines(series_B(2)), "0: 0\n1: 2\n2: 8\n");
  EXPECT_EQ(format_series_json(series_A(3)), "[\"0\",\"1\",\"3\",\"11\"]");
}
