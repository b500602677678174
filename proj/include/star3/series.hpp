#pragma once

// Truncated formal power series over the integers. A series of order N keeps
// the coefficients of x^0..x^N; binary operations truncate to the smaller order.

#include "star3/bigint.hpp"
#include "star3/numbers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace star3 {

class IntegerSeries {
 public:
  IntegerSeries() : coeffs_(1, 0) {}

  explicit IntegerSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
  }

  /// Zero series of order N.
  static IntegerSeries zero(int order) { return IntegerSeries(std::vector<BigInt>(order + 1, 0)); }
  /// The series x, of order N >= 1.
  static IntegerSeries x(int order) {
    auto s = zero(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
  }
  static IntegerSeries constant(const BigInt& c, int order) {
    auto s = zero(order);
    s.coeffs_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](int i) const { return coeffs_.at(i); }
  BigInt& operator[](int i) { return coeffs_.at(i); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  IntegerSeries truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return IntegerSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend bool operator==(const IntegerSeries&, const IntegerSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

inline IntegerSeries series_add(const IntegerSeries& f, const IntegerSeries& g) {
  const int N = std::min(f.order(), g.order());
  auto r = IntegerSeries::zero(N);
  for (int i = 0; i <= N; ++i) r[i] = f[i] + g[i];
  return r;
}

inline IntegerSeries series_sub(const IntegerSeries& f, const IntegerSeries& g) {
  const int N = std::min(f.order(), g.order());
  auto r = IntegerSeries::zero(N);
  for (int i = 0; i <= N; ++i) r[i] = f[i] - g[i];
  return r;
}

inline IntegerSeries series_scale(const IntegerSeries& f, const BigInt& c) {
  auto r = f;
  for (int i = 0; i <= r.order(); ++i) r[i] *= c;
  return r;
}

inline IntegerSeries series_mul(const IntegerSeries& f, const IntegerSeries& g) {
  const int N = std::min(f.order(), g.order());
  auto r = IntegerSeries::zero(N);
  for (int i = 0; i <= N; ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; i + j <= N; ++j) r[i + j] += f[i] * g[j];
  }
  return r;
}

/// f(g(x)); g must have zero constant term.
inline IntegerSeries series_compose(const IntegerSeries& f, const IntegerSeries& g) {
  if (g[0] != 0) throw std::invalid_argument("inner series of a composition must have zero constant term");
  const int N = std::min(f.order(), g.order());
  auto r = IntegerSeries::constant(f[N], N);
  const auto inner = g.truncated(N);
  for (int i = N - 1; i >= 0; --i) {
    r = series_mul(r, inner);
    r[0] += f[i];
  }
  return r;
}

/// f / g; the constant term of g must be +1 or -1.
inline IntegerSeries series_div(const IntegerSeries& f, const IntegerSeries& g) {
  if (g[0] != 1 && g[0] != -1) throw std::invalid_argument("divisor must have a unit constant term");
  const int N = std::min(f.order(), g.order());
  auto h = IntegerSeries::zero(N);
  for (int n = 0; n <= N; ++n) {
    BigInt s = f[n];
    for (int i = 1; i <= n; ++i) s -= g[i] * h[n - i];
    h[n] = s * g[0];  // dividing by a unit
  }
  return h;
}

inline IntegerSeries catalan_series(int N) { return IntegerSeries(catalan_numbers(N)); }
inline IntegerSeries motzkin_series(int N) { return IntegerSeries(motzkin_numbers(N)); }

/// A(x) = (c(x) - 1) m(c(x) - 1), generating |A_{3n}|.
inline IntegerSeries series_A(int N) {
  if (N < 1) throw std::invalid_argument("order must be at least 1");
  const auto c1 = series_sub(catalan_series(N), IntegerSeries::constant(1, N));
  return series_mul(c1, series_compose(motzkin_series(N), c1));
}

/// B(x) = 2A(x) / (1 - A(x)), generating |Av*_{3n}(132)|.
inline IntegerSeries series_B(int N) {
  const auto a = series_A(N);
  return series_div(series_scale(a, 2), series_sub(IntegerSeries::constant(1, N), a));
}

/// "n: coefficient" per line.
inline std::string format_series_lines(const IntegerSeries& s) {
  std::string out;
  for (int i = 0; i <= s.order(); ++i) out += std::to_string(i) + ": " + s[i].str() + "\n";
  return out;
}

/// JSON array of decimal strings.
inline std::string format_series_json(const IntegerSeries& s) {
  std::string out = "[";
  for (int i = 0; i <= s.order(); ++i) {
    if (i) out += ",";
    out += "\"" + s[i].str() + "\"";
  }
  return out + "]";
}

}  // namespace star3
