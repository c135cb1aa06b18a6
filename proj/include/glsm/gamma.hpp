#pragma once

#include <complex>

#include "glsm/nilpoly.hpp"
#include "glsm/rational.hpp"

namespace glsm {

using Complex = std::complex<double>;

// Gamma and digamma on the complex plane, Lanczos + reflection. Target
// accuracy ~1e-13 relative away from poles.
Complex gamma_fn(Complex z);
Complex digamma_fn(Complex z);

bool is_nonpositive_integer(Complex s, double tol = 1e-12);

// Gamma extended to first order along a nilpotent direction:
//   Gamma(s + b*eps) = Gamma(s) + Gamma(s) psi(s) b * eps.
// Throws PoleArgument at nonpositive integer s.
DualNum gamma_dual(Complex s, Complex b);

// 1/Gamma(s + b*eps). Entire in s: at a nonpositive integer -k the value part
// vanishes and the slope is b * (-1)^k k!.
DualNum rgamma_dual(Complex s, Complex b);

// h-constants: psi(1 - f) - psi(1) for f in {0, 1/3, 2/3}.
double h_constant(const Rational& frac_a);

// Superscript-variable factor as a dual number in u = H_v/hbar:
//   Gamma(1+3u+3b_v) / [Gamma(1+u+b_v-b_a) Gamma(1+u+b_v)^2] * Phi(<b_a>),
//   Phi(f)(u) = Gamma(1+u-f) Gamma(1+u)^2 / Gamma(1+3u).
// b_v a nonnegative integer, u passed by its eps-slope. Handles the
// nonpositive-integer pole of the middle factor (0 <= b_v < b_a with integer
// difference) through the reciprocal expansion, where the value part is a
// pure eps-multiple.
DualNum gamma_factor_super(long beta_v, const Rational& beta_a, Complex dual_slot);

// Subscript-variable factor (scalar), including its sign (-1)^{3 beta_v}:
//   (-1)^{3b} [G(<b-b_a>)/G(b-b_a+1)] [G(<b>)/G(b+1)]^2 / G(-3b).
// Requires beta_v < 0 non-integer and beta_v - beta_a non-integer.
Complex gamma_factor_sub(const Rational& beta_v, const Rational& beta_a);

// a-variable factor: 1 / Gamma(1 + 3 beta_a).
Complex gamma_factor_a(const Rational& beta_a);

Rational frac_part(const Rational& r); // representative in [0,1)

} // namespace glsm
