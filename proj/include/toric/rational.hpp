#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "toric/error.hpp"

namespace toric {

using Integer = std::int64_t;

// Overflow-checked 64-bit arithmetic. Geometry never rounds: a result that
// does not fit raises ArithmeticOverflow instead.
namespace checked {

inline Integer add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::ArithmeticOverflow, "integer overflow in addition");
  return r;
}

inline Integer sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorCode::ArithmeticOverflow, "integer overflow in subtraction");
  return r;
}

inline Integer mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::ArithmeticOverflow, "integer overflow in multiplication");
  return r;
}

inline Integer neg(Integer a) { return sub(0, a); }

inline Integer narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(ErrorCode::ArithmeticOverflow, "integer overflow");
  return static_cast<Integer>(v);
}

}  // namespace checked

inline Integer gcd(Integer a, Integer b) {
  return static_cast<Integer>(std::gcd(a, b));
}

// Floor division for a positive divisor.
inline Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Exact rational number with a strictly positive, reduced denominator.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Integer n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(Integer n, Integer d);

  Integer num() const noexcept { return num_; }
  Integer den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Integer floor() const { return floor_div(num_, den_); }
  Rational frac() const { return *this - Rational(floor()); }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string to_string() const;

  Rational operator-() const { return Rational(checked::neg(num_), den_, Raw{}); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

 private:
  struct Raw {};
  Rational(Integer n, Integer d, Raw) : num_(n), den_(d) {}
  static Rational reduced(__int128 n, __int128 d);

  Integer num_ = 0;
  Integer den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace toric
