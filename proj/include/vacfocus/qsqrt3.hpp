#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace vacfocus {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element p + q√3 of the field ℚ(√3).
class QSqrt3 {
 public:
  QSqrt3() = default;
  QSqrt3(int p) : p_(p) {}  // NOLINT(google-explicit-constructor)
  QSqrt3(Rational p, Rational q = 0) : p_(std::move(p)), q_(std::move(q)) {}

  static QSqrt3 sqrt3() { return {0, 1}; }

  const Rational& rational_part() const { return p_; }
  const Rational& sqrt3_part() const { return q_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }

  QSqrt3 conjugate() const { return {p_, -q_}; }
  /// Field norm p² − 3q²; nonzero for every nonzero element.
  Rational norm() const { return p_ * p_ - 3 * q_ * q_; }
  QSqrt3 inverse() const;

  double to_double() const;
  /// Human-readable form such as "35√3/972", "-97/2916" or "1/2 + √3/4".
  std::string to_string() const;

  QSqrt3& operator+=(const QSqrt3& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
  }
  QSqrt3& operator-=(const QSqrt3& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
  }
  QSqrt3& operator*=(const QSqrt3& o) {
    Rational p = p_ * o.p_ + 3 * q_ * o.q_;
    q_ = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(p);
    return *this;
  }
  QSqrt3& operator/=(const QSqrt3& o) { return *this *= o.inverse(); }

  friend QSqrt3 operator+(QSqrt3 a, const QSqrt3& b) { return a += b; }
  friend QSqrt3 operator-(QSqrt3 a, const QSqrt3& b) { return a -= b; }
  friend QSqrt3 operator*(QSqrt3 a, const QSqrt3& b) { return a *= b; }
  friend QSqrt3 operator/(QSqrt3 a, const QSqrt3& b) { return a /= b; }
  friend QSqrt3 operator-(const QSqrt3& a) { return {-a.p_, -a.q_}; }
  friend bool operator==(const QSqrt3& a, const QSqrt3& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const QSqrt3& a, const QSqrt3& b) { return !(a == b); }

 private:
  Rational p_{0};
  Rational q_{0};
};

inline double to_double(const QSqrt3& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

}  // namespace vacfocus
