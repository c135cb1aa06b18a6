#pragma once

#include <array>
#include <complex>
#include <string>

#include "glsm/errors.hpp"
#include "glsm/rational.hpp"

namespace glsm {

// Monomials in H_x, H_y, H_z with H_v^2 = 0, indexed by the bitmask of the
// generators present: bit v set <=> H_v divides the monomial.
inline constexpr int kNumMonomials = 8;

inline int monomial_weight(int mask) {
  return ((mask >> 0) & 1) + ((mask >> 1) & 1) + ((mask >> 2) & 1);
}

inline std::string monomial_name(int mask) {
  if (mask == 0) return "1";
  std::string s;
  static const char* names[3] = {"Hx", "Hy", "Hz"};
  for (int v = 0; v < 3; ++v)
    if (mask & (1 << v)) s += names[v];
  return s;
}

// Element of the graded-commutative ring C[H_x,H_y,H_z]/(H_v^2). Since every
// generator squares to zero, a product with a repeated generator vanishes and
// the ring is plainly commutative on the surviving monomials.
template <typename T>
class NilPoly {
public:
  NilPoly() { c_.fill(T(0)); }
  explicit NilPoly(const T& scalar) {
    c_.fill(T(0));
    c_[0] = scalar;
  }

  static NilPoly generator(int v) {
    NilPoly p;
    p.c_[1 << v] = T(1);
    return p;
  }

  static NilPoly monomial(int mask, const T& coeff) {
    NilPoly p;
    p.c_[mask] = coeff;
    return p;
  }

  const T& operator[](int mask) const { return c_[mask]; }
  T& operator[](int mask) { return c_[mask]; }
  const T& scalar_part() const { return c_[0]; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!ScalarTraits<T>::is_zero(v)) return false;
    return true;
  }

  friend NilPoly operator+(const NilPoly& a, const NilPoly& b) {
    NilPoly out;
    for (int m = 0; m < kNumMonomials; ++m) out.c_[m] = a.c_[m] + b.c_[m];
    return out;
  }
  friend NilPoly operator-(const NilPoly& a, const NilPoly& b) {
    NilPoly out;
    for (int m = 0; m < kNumMonomials; ++m) out.c_[m] = a.c_[m] - b.c_[m];
    return out;
  }
  NilPoly operator-() const {
    NilPoly out;
    for (int m = 0; m < kNumMonomials; ++m) out.c_[m] = -c_[m];
    return out;
  }

  friend NilPoly operator*(const NilPoly& a, const NilPoly& b) {
    NilPoly out;
    for (int m = 0; m < kNumMonomials; ++m) {
      if (ScalarTraits<T>::is_zero(a.c_[m])) continue;
      for (int n = 0; n < kNumMonomials; ++n) {
        if (m & n) continue; // repeated generator
        if (ScalarTraits<T>::is_zero(b.c_[n])) continue;
        out.c_[m | n] = out.c_[m | n] + a.c_[m] * b.c_[n];
      }
    }
    return out;
  }
  friend NilPoly operator*(const T& s, const NilPoly& p) { return NilPoly(s) * p; }
  friend NilPoly operator*(const NilPoly& p, const T& s) { return p * NilPoly(s); }
  NilPoly& operator+=(const NilPoly& o) { return *this = *this + o; }
  NilPoly& operator-=(const NilPoly& o) { return *this = *this - o; }
  NilPoly& operator*=(const NilPoly& o) { return *this = *this * o; }

  friend bool operator==(const NilPoly& a, const NilPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const NilPoly& a, const NilPoly& b) { return !(a == b); }

  // Exact inverse: with n the nilpotent part, 1/(s+n) = (1/s)(1 - n/s +
  // (n/s)^2 - (n/s)^3); the series terminates at the top monomial.
  NilPoly inverse() const {
    if (ScalarTraits<T>::is_zero(c_[0]))
      throw ZeroScalarPart("NilPoly inverse: zero scalar part");
    T inv_s = T(1) / c_[0];
    NilPoly n = *this;
    n.c_[0] = T(0);
    NilPoly u = n * inv_s; // nilpotent, u^4 = 0
    NilPoly out(T(1));
    NilPoly pw = u;
    out -= pw;
    pw *= u;
    out += pw;
    pw *= u;
    out -= pw;
    return out * inv_s;
  }

private:
  std::array<T, kNumMonomials> c_{};
};

template <typename T>
NilPoly<T> nil_mul(const NilPoly<T>& u, const NilPoly<T>& v) {
  return u * v;
}

template <typename T>
NilPoly<T> nil_inv(const NilPoly<T>& u) {
  return u.inverse();
}

using NilPolyQ = NilPoly<Rational>;
using NilPolyC = NilPoly<std::complex<double>>;

inline NilPolyC to_complex(const NilPolyQ& p) {
  NilPolyC out;
  for (int m = 0; m < kNumMonomials; ++m) out[m] = {p[m].to_double(), 0.0};
  return out;
}

// First-order truncated value a + b*eps with eps^2 = 0. Carries the expansion
// of a function along one nilpotent direction at a time.
struct DualNum {
  std::complex<double> a{0.0, 0.0};
  std::complex<double> b{0.0, 0.0};

  DualNum() = default;
  DualNum(std::complex<double> value, std::complex<double> slope) : a(value), b(slope) {}
  explicit DualNum(std::complex<double> value) : a(value) {}

  friend DualNum operator+(const DualNum& x, const DualNum& y) { return {x.a + y.a, x.b + y.b}; }
  friend DualNum operator-(const DualNum& x, const DualNum& y) { return {x.a - y.a, x.b - y.b}; }
  friend DualNum operator*(const DualNum& x, const DualNum& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
  }
  friend DualNum operator*(std::complex<double> s, const DualNum& y) { return {s * y.a, s * y.b}; }
  DualNum inverse() const {
    if (a == std::complex<double>(0.0, 0.0))
      throw ZeroScalarPart("DualNum inverse: zero value part");
    auto ia = 1.0 / a;
    return {ia, -b * ia * ia};
  }
  friend DualNum operator/(const DualNum& x, const DualNum& y) { return x * y.inverse(); }
};

} // namespace glsm
