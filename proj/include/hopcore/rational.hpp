#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "hopcore/errors.hpp"

namespace hopcore {

// Exact rational with 64-bit numerator/denominator. den == 0 encodes +infinity.
// Intermediates go through __int128; anything that would leave 64 bits throws
// rather than silently wrapping.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  static Rational infinity() {
    Rational r;
    r.num = 1;
    r.den = 0;
    return r;
  }

  bool is_infinite() const { return den == 0; }

  void normalize() {
    if (den == 0) {
      num = 1;
      return;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  double to_double() const {
    if (is_infinite()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(num) / static_cast<double>(den);
  }

  std::string str() const {
    if (is_infinite()) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    return from_wide(n, d);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    require(!b.is_infinite(), ErrorKind::invalid_parameter, "rational subtraction of infinity");
    if (a.is_infinite()) return infinity();
    __int128 n = static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    return from_wide(n, d);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    __int128 n = static_cast<__int128>(a.num) * b.num;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    return from_wide(n, d);
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    require(b.num != 0, ErrorKind::invalid_parameter, "rational division by zero");
    if (a.is_infinite()) return infinity();
    if (b.is_infinite()) return Rational(0);
    __int128 n = static_cast<__int128>(a.num) * b.den;
    __int128 d = static_cast<__int128>(a.den) * b.num;
    return from_wide(n, d);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (b.is_infinite()) return !a.is_infinite();
    if (a.is_infinite()) return false;
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd_wide(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    require(n >= lo && n <= hi && d <= hi, ErrorKind::invalid_parameter, "rational overflow");
    Rational r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d);
    if (r.num == 0) r.den = 1;
    return r;
  }

  static __int128 gcd_wide(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
};

// Largest dyadic rational with denominator 2^32 that is <= x (or >= x for ceil).
inline Rational dyadic_floor(double x) {
  if (x <= 0) return Rational(0);
  const double scale = 4294967296.0;  // 2^32
  double scaled = x * scale;
  require(scaled < 9.0e18, ErrorKind::invalid_parameter, "dyadic conversion overflow");
  return Rational(static_cast<std::int64_t>(scaled), INT64_C(4294967296));
}

inline Rational dyadic_ceil(double x) {
  if (x <= 0) return Rational(0);
  const double scale = 4294967296.0;
  double scaled = x * scale;
  require(scaled < 9.0e18, ErrorKind::invalid_parameter, "dyadic conversion overflow");
  auto f = static_cast<std::int64_t>(scaled);
  if (static_cast<double>(f) < scaled) ++f;
  return Rational(f, INT64_C(4294967296));
}

}  // namespace hopcore
