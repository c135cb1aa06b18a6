#include "glsm/gamma.hpp"

#include <cmath>

#include "glsm/errors.hpp"

namespace glsm {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos approximation, g = 7, 9 coefficients.
constexpr int kLanczosG = 7;
constexpr double kLanczosP[kLanczosG + 2] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_gamma(Complex z) {
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
  z -= 1.0;
  Complex x = kLanczosP[0];
  for (int i = 1; i < kLanczosG + 2; ++i) x += kLanczosP[i] / (z + Complex(double(i), 0.0));
  Complex t = z + (kLanczosG + 0.5);
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// Asymptotic digamma after shifting Re(z) >= 12.
Complex digamma_asymptotic(Complex z) {
  // psi(z) ~ ln z - 1/(2z) - sum B_{2n} / (2n z^{2n})
  static const double b[] = {
      1.0 / 6.0,   -1.0 / 30.0,  1.0 / 42.0,    -1.0 / 30.0,
      5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,
  };
  Complex inv = 1.0 / z;
  Complex inv2 = inv * inv;
  Complex out = std::log(z) - 0.5 * inv;
  Complex p = inv2;
  for (int n = 0; n < 7; ++n) {
    out -= b[n] / (2.0 * (n + 1)) * p;
    p *= inv2;
  }
  return out;
}

} // namespace

bool is_nonpositive_integer(Complex s, double tol) {
  if (std::abs(s.imag()) > tol) return false;
  double r = std::round(s.real());
  return r <= 0.0 && std::abs(s.real() - r) <= tol;
}

Complex gamma_fn(Complex z) { return lanczos_gamma(z); }

Complex digamma_fn(Complex z) {
  if (z.real() < 0.5) {
    // psi(z) = psi(1-z) - pi cot(pi z)
    return digamma_fn(1.0 - z) - kPi / std::tan(kPi * z);
  }
  Complex shift(0.0, 0.0);
  while (z.real() < 12.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  return digamma_asymptotic(z) + shift;
}

DualNum gamma_dual(Complex s, Complex b) {
  if (is_nonpositive_integer(s)) throw PoleArgument("gamma_dual at nonpositive integer");
  Complex g = gamma_fn(s);
  return {g, g * digamma_fn(s) * b};
}

DualNum rgamma_dual(Complex s, Complex b) {
  if (is_nonpositive_integer(s)) {
    long k = std::lround(-s.real());
    double fact = 1.0;
    for (long i = 2; i <= k; ++i) fact *= double(i);
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    // 1/Gamma vanishes at -k with slope (-1)^k k!.
    return {Complex(0.0, 0.0), b * sign * fact};
  }
  Complex g = gamma_fn(s);
  Complex ig = 1.0 / g;
  return {ig, -digamma_fn(s) * ig * b};
}

Rational frac_part(const Rational& r) {
  std::int64_t n = r.num();
  std::int64_t d = r.den();
  std::int64_t mod = ((n % d) + d) % d;
  return Rational(mod, d);
}

double h_constant(const Rational& frac_a) {
  Rational f = frac_part(frac_a);
  if (f == Rational(0)) return 0.0;
  const double ln3 = std::log(3.0);
  if (f == Rational(1, 3)) return kPi / (2.0 * std::sqrt(3.0)) - 1.5 * ln3;
  if (f == Rational(2, 3)) return -kPi / (2.0 * std::sqrt(3.0)) - 1.5 * ln3;
  throw BadArgument("h_constant expects a fractional part in {0,1/3,2/3}");
}

DualNum gamma_factor_super(long beta_v, const Rational& beta_a, Complex dual_slot) {
  if (beta_v < 0) throw BadArgument("superscript factor needs beta_v >= 0");
  const Complex u = dual_slot; // slope of H_v/hbar
  const double bv = double(beta_v);
  const double ba = beta_a.to_double();
  const Rational fa = frac_part(beta_a);

  DualNum num = gamma_dual(Complex(1.0 + 3.0 * bv, 0.0), 3.0 * u);
  DualNum rmid = rgamma_dual(Complex(1.0 + bv - ba, 0.0), u);
  DualNum rside = rgamma_dual(Complex(1.0 + bv, 0.0), u);

  // Phi(<beta_a>) = Gamma(1+u-f) Gamma(1+u)^2 / Gamma(1+3u)
  DualNum phi = gamma_dual(Complex(1.0 - fa.to_double(), 0.0), u) *
                gamma_dual(Complex(1.0, 0.0), u) * gamma_dual(Complex(1.0, 0.0), u) *
                rgamma_dual(Complex(1.0, 0.0), 3.0 * u);

  return num * rmid * rside * rside * phi;
}

Complex gamma_factor_sub(const Rational& beta_v, const Rational& beta_a) {
  if (beta_v >= Rational(0) || beta_v.is_integer())
    throw BadArgument("subscript factor needs negative non-integer beta_v");
  Rational diff = beta_v - beta_a;
  if (diff.is_integer())
    throw VanishingTerm("beta_v - beta_a integral: term vanishes");
  Rational fd = frac_part(diff);
  Rational fv = frac_part(beta_v);

  Complex r1 = gamma_fn(Complex(fd.to_double(), 0.0)) /
               gamma_fn(Complex(diff.to_double() + 1.0, 0.0));
  Complex r2 = gamma_fn(Complex(fv.to_double(), 0.0)) /
               gamma_fn(Complex(beta_v.to_double() + 1.0, 0.0));
  Complex r3 = gamma_fn(Complex(-3.0 * beta_v.to_double(), 0.0));

  long three_beta = beta_v.num() * (3 / beta_v.den()); // 3*beta_v as integer
  double sign = (three_beta % 2 == 0) ? 1.0 : -1.0;
  return sign * r1 * r2 * r2 / r3;
}

Complex gamma_factor_a(const Rational& beta_a) {
  return 1.0 / gamma_fn(Complex(1.0 + 3.0 * beta_a.to_double(), 0.0));
}

} // namespace glsm
