#pragma once

#include "glsm/degrees.hpp"
#include "glsm/model.hpp"
#include "glsm/nilpoly.hpp"
#include "glsm/state_space.hpp"

namespace glsm {

// floor/ceil for exact rationals.
inline long floor_r(const Rational& r) {
  auto n = r.num();
  auto d = r.den();
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}
inline long ceil_r(const Rational& r) { return -floor_r(-r); }

// Cohomology of O(3b) on the football curve with one order-3 point,
// normalized so deg O(n) = n/3.
long h0_dim(const Rational& b);
long h1_dim(const Rational& b);

// Product over nu = 0 .. ceil(b)-1 of (D + (b - nu) hbar); empty product = 1.
template <typename T>
NilPoly<T> euler_denominator_factor(const Rational& b, const NilPoly<T>& d, const T& hbar) {
  if (b < Rational(0)) throw BadArgument("denominator factor needs b >= 0");
  NilPoly<T> out(T(1));
  for (long nu = 0; nu <= ceil_r(b) - 1; ++nu) {
    T c = ScalarTraits<T>::from_rational(b - Rational(nu)) * hbar;
    out *= d + NilPoly<T>(c);
  }
  return out;
}

// Product over nu = floor(b)+1 .. -1 of (D + (b - nu) hbar); empty for b >= -1.
template <typename T>
NilPoly<T> euler_numerator_factor(const Rational& b, const NilPoly<T>& d, const T& hbar) {
  if (b >= Rational(0)) throw BadArgument("numerator factor needs b < 0");
  NilPoly<T> out(T(1));
  for (long nu = floor_r(b) + 1; nu <= -1; ++nu) {
    T c = ScalarTraits<T>::from_rational(b - Rational(nu)) * hbar;
    out *= d + NilPoly<T>(c);
  }
  return out;
}

template <typename T>
NilPoly<T> divisor_to_nilpoly(const DivisorForm& d) {
  NilPoly<T> out;
  for (int v = 0; v < 3; ++v)
    if (d.coeff[v] != 0) out += NilPoly<T>::monomial(1 << v, T(d.coeff[v]));
  return out;
}

// Net hbar-weight of the coefficient: #denominator factors - #numerator
// factors. i_coefficient(lambda hbar) = lambda^{-w} (H -> H/lambda)-version.
long hbar_weight(const Degree& beta, const ChamberChar& theta);

// Number of superscript variables with 0 <= beta_v < beta_a and integer
// difference (each inserts one H_v and so one hbar of homogeneity).
int a_insertion_count(const Degree& beta, const ChamberChar& theta);

// One coefficient of the I-series at degree beta (m = 1): the ratio of Euler
// factor products over the 13 characters, times the A_v = H_v insertions
// for superscript v with 0 <= beta_v < beta_a and integer difference,
// attached to the sector <-beta>.
template <typename T>
AmbientClass<T> i_coefficient(const Degree& beta, const ChamberChar& theta, const T& hbar) {
  if (ScalarTraits<T>::is_zero(hbar)) throw ZeroHbar("hbar must be nonzero");
  NilPoly<T> num(T(1));
  NilPoly<T> den(T(1));
  for (int rho = 0; rho < kNumCoords; ++rho) {
    Rational b = beta_rho(rho, beta, 1);
    NilPoly<T> d = divisor_to_nilpoly<T>(toric_divisor(rho, theta));
    if (b >= Rational(0))
      den *= euler_denominator_factor(b, d, hbar);
    else if (b < Rational(-1))
      num *= euler_numerator_factor(b, d, hbar);
  }
  NilPoly<T> coeff = num * den.inverse();
  for (int v = 0; v < 3; ++v) {
    if (!theta.is_superscript(Var(v))) continue;
    Rational bv = beta.component(v);
    if (bv >= Rational(0) && bv < beta.a() && (bv - beta.a()).is_integer())
      coeff *= NilPoly<T>::generator(v);
  }
  return AmbientClass<T>(SectorLabel::from_degree_fracs(-beta), coeff);
}

} // namespace glsm
