#include "glsm/orbi.hpp"

namespace glsm {

long h0_dim(const Rational& b) {
  if (b.den() != 1 && b.den() != 3) throw BadArgument("degree must be an integer third");
  if (b < Rational(0)) return 0;
  return floor_r(b) + 1;
}

long h1_dim(const Rational& b) {
  if (b.den() != 1 && b.den() != 3) throw BadArgument("degree must be an integer third");
  if (b >= Rational(-1)) return 0;
  return -floor_r(b) - 1;
}

long hbar_weight(const Degree& beta, const ChamberChar&) {
  long w = 0;
  for (int rho = 0; rho < kNumCoords; ++rho) {
    Rational b = beta_rho(rho, beta, 1);
    if (b >= Rational(0))
      w += ceil_r(b);
    else if (b < Rational(-1))
      w -= (-floor_r(b) - 1);
  }
  return w;
}

int a_insertion_count(const Degree& beta, const ChamberChar& theta) {
  int k = 0;
  for (int v = 0; v < 3; ++v) {
    if (!theta.is_superscript(Var(v))) continue;
    Rational bv = beta.component(v);
    if (bv >= Rational(0) && bv < beta.a() && (bv - beta.a()).is_integer()) ++k;
  }
  return k;
}

} // namespace glsm
