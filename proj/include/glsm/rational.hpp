#pragma once

#include <cassert>
#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "glsm/errors.hpp"

namespace glsm {

// Exact rational on int64 with normalized sign and gcd-reduced terms.
// Coefficient magnitudes at desk scale stay far below overflow; products
// are computed through __int128 and trapped if they leave the int64 range.
class Rational {
public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                    checked(i128(a.den_) * b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(checked(i128(a.num_) * b.den_ - i128(b.num_) * a.den_),
                    checked(i128(a.den_) * b.den_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked(i128(a.num_) * b.num_), checked(i128(a.den_) * b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw ZeroScalarPart("division by zero rational");
    return Rational(checked(i128(a.num_) * b.den_), checked(i128(a.den_) * b.num_));
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const { return double(num_) / double(den_); }

  // "-1/3" style; integers render without the denominator.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw BadArgument("cannot parse rational: " + s);
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  using i128 = __int128;

  static std::int64_t checked(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw Error("rational overflow");
    return std::int64_t(v);
  }

  void normalize() {
    if (den_ == 0) throw ZeroScalarPart("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

// Scalar-field glue so ring code can be instantiated exactly or numerically.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& r) { return r.is_zero(); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static std::complex<double> from_rational(const Rational& r) { return {r.to_double(), 0.0}; }
  static bool is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }
};

} // namespace glsm
