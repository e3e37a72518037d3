#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vacfocus {

/// Truncated power series c₀ + c₁t + … + c_N t^N over a coefficient field T.
///
/// Used both with exact coefficients (QSqrt3) for the series reversion and
/// with doubles as forward-mode Taylor jets for derivative evaluation.
template <class T>
class Series {
 public:
  explicit Series(std::size_t order) : c_(order + 1, T(0)) {}
  Series(std::vector<T> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) {
      throw std::invalid_argument("Series: empty coefficient list");
    }
  }

  static Series constant(const T& value, std::size_t order) {
    Series s(order);
    s.c_[0] = value;
    return s;
  }
  /// The expansion variable t itself (optionally shifted by a value).
  static Series variable(std::size_t order, const T& at = T(0)) {
    Series s(order);
    s.c_[0] = at;
    if (order >= 1) {
      s.c_[1] = T(1);
    }
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const T& operator[](std::size_t k) const { return c_[k]; }
  T& operator[](std::size_t k) { return c_[k]; }
  const std::vector<T>& coefficients() const { return c_; }

  Series& operator+=(const Series& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Series& operator*=(const T& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(const Series& a) {
    Series r(a.order());
    for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = -a.c_[k];
    return r;
  }
  friend Series operator*(Series a, const T& s) { return a *= s; }
  friend Series operator*(const T& s, Series a) { return a *= s; }

  friend Series operator*(const Series& a, const Series& b) {
    a.check(b);
    const std::size_t n = a.order();
    Series r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  Series inverse() const {
    if (is_zero(c_[0])) {
      throw std::domain_error("Series: inverse needs a nonzero constant term");
    }
    const std::size_t n = order();
    Series r(n);
    const T inv0 = T(1) / c_[0];
    r.c_[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
      T acc(0);
      for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -(acc * inv0);
    }
    return r;
  }

  Series pow(unsigned e) const {
    Series r = constant(T(1), order());
    Series base = *this;
    while (e != 0) {
      if (e & 1u) r = r * base;
      e >>= 1u;
      if (e != 0) base = base * base;
    }
    return r;
  }

  /// Drops the constant term and shifts down: (s − s₀)/t, order reduced by one.
  Series divide_by_variable() const {
    if (!is_zero(c_[0])) {
      throw std::domain_error("Series: division by t needs a zero constant term");
    }
    if (order() == 0) {
      throw std::domain_error("Series: order too low to divide by t");
    }
    return Series(std::vector<T>(c_.begin() + 1, c_.end()));
  }

  Series truncated(std::size_t order) const {
    std::vector<T> c(order + 1, T(0));
    for (std::size_t k = 0; k <= order && k < c_.size(); ++k) c[k] = c_[k];
    return Series(std::move(c));
  }

  /// Evaluates the polynomial at t (Horner).
  T evaluate(const T& t) const {
    T r = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) r = r * t + c_[k];
    return r;
  }

 private:
  static bool is_zero(const T& x) { return x == T(0); }
  void check(const Series& o) const {
    if (o.c_.size() != c_.size()) {
      throw std::invalid_argument("Series: order mismatch");
    }
  }

  std::vector<T> c_;
};

/// Σ outer[k]·inner^k truncated to inner's order. inner must have zero
/// constant term (it is the displacement from the outer expansion point).
template <class T>
Series<T> compose(const std::vector<T>& outer, const Series<T>& inner) {
  if (!(inner[0] == T(0))) {
    throw std::domain_error("compose: inner series must vanish at t = 0");
  }
  const std::size_t n = inner.order();
  // Terms beyond inner^n vanish under truncation.
  std::size_t top = std::min(outer.size(), n + 1);
  Series<T> r = Series<T>::constant(outer[top - 1], n);
  for (std::size_t k = top - 1; k-- > 0;) {
    r = r * inner;
    r[0] += outer[k];
  }
  return r;
}

/// Taylor coefficients of sin(c + δ) and cos(c + δ) in δ, given sin c and cos c.
template <class T>
std::pair<std::vector<T>, std::vector<T>> sin_cos_taylor(const T& sin_c, const T& cos_c,
                                                         std::size_t order) {
  std::vector<T> s(order + 1, T(0));
  std::vector<T> c(order + 1, T(0));
  // k-th derivative of sin cycles sin, cos, -sin, -cos.
  const T ds[4] = {sin_c, cos_c, -sin_c, -cos_c};
  const T dc[4] = {cos_c, -sin_c, -cos_c, sin_c};
  T factorial(1);
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) factorial *= T(static_cast<int>(k));
    s[k] = ds[k % 4] / factorial;
    c[k] = dc[k % 4] / factorial;
  }
  return {s, c};
}

}  // namespace vacfocus
