#include "vacfocus/qsqrt3.hpp"

#include <cmath>
#include <stdexcept>

namespace vacfocus {

QSqrt3 QSqrt3::inverse() const {
  Rational n = norm();
  if (n == 0) {
    throw std::domain_error("QSqrt3: inverse of zero");
  }
  return {p_ / n, -q_ / n};
}

double QSqrt3::to_double() const {
  return static_cast<double>(p_) + static_cast<double>(q_) * std::sqrt(3.0);
}

namespace {

// "a/b" or "a" for a rational; sign handled by the caller.
std::string magnitude(const Rational& r, bool with_root) {
  const boost::multiprecision::cpp_int num = abs(boost::multiprecision::numerator(r));
  const boost::multiprecision::cpp_int den = boost::multiprecision::denominator(r);
  std::string s;
  if (!with_root || num != 1) {
    s = num.str();
  }
  if (with_root) {
    s += "√3";
  }
  if (den != 1) {
    s += "/" + den.str();
  }
  return s;
}

}  // namespace

std::string QSqrt3::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  if (p_ != 0) {
    out = (p_ < 0 ? "-" : "") + magnitude(p_, false);
  }
  if (q_ != 0) {
    if (out.empty()) {
      out = (q_ < 0 ? "-" : "") + magnitude(q_, true);
    } else {
      out += (q_ < 0 ? " - " : " + ") + magnitude(q_, true);
    }
  }
  return out;
}

}  // namespace vacfocus
