#include "glsm/degrees.hpp"

#include <algorithm>

namespace glsm {

Rational beta_rho(const std::array<int, kNumWeights>& weight, const Degree& beta, int m) {
  Rational out(0);
  for (int i = 0; i < 4; ++i) out += Rational(weight[i]) * beta.component(i);
  out += Rational(weight[4]) * Rational(m - 2);
  return out;
}

Rational beta_rho(int rho, const Degree& beta, int m) {
  if (rho < 0 || rho >= kNumCoords) throw BadArgument("character index out of range");
  return beta_rho(GlsmModel::instance().weights[rho], beta, m);
}

Degree extremal_degree(const ChamberChar& theta, int m) {
  Degree d;
  for (int v = 0; v < 3; ++v)
    if (theta.is_subscript(Var(v))) d.thirds[v] = m - 2;
  return d;
}

Rational beta_theta(const Degree& beta, int m, const ChamberChar& theta) {
  Rational out(0);
  for (int i = 0; i < 4; ++i) out += Rational(theta.exponent(i)) * beta.component(i);
  out += Rational(theta.num_subscripts()) * Rational(m - 2);
  return out;
}

bool passes_effectiveness(const Degree& beta, int m, const ChamberChar& theta) {
  if (beta.a() < Rational(0)) return false;
  for (int v = 0; v < 3; ++v) {
    if (theta.is_superscript(Var(v))) {
      if (beta.component(v) < Rational(0)) return false;
    } else {
      if (beta.component(v) > Rational(m - 2, 3)) return false;
    }
  }
  Rational bt = beta_theta(beta, m, theta);
  return bt.is_integer() && bt >= Rational(0);
}

bool is_unstable_tuple(const Degree& beta, int m, const Epsilon& eps, const ChamberChar& theta) {
  if (m == 2) return beta == extremal_degree(theta, 2);
  if (m > 2) return false;
  Rational bt = beta_theta(beta, m, theta);
  switch (eps.kind) {
    case Epsilon::ZeroPlus:
      return bt > Rational(0);
    case Epsilon::Infinity:
      return false;
    case Epsilon::Finite: {
      if (eps.value <= Rational(0)) throw BadArgument("epsilon must be positive");
      Rational bound = Rational(m == 1 ? 1 : 2) / eps.value;
      return bt > bound;
    }
  }
  return false;
}

std::vector<Degree> enumerate_ifunction_degrees(const ChamberChar& theta, const Rational& cutoff) {
  if (cutoff < Rational(0)) throw BadArgument("cutoff must be nonnegative");
  // beta_theta = sum over superscript v of 3 beta_v + sum over subscript v of
  // (-3 beta_v - 1) + 3 beta_a, and every summand is nonnegative on the
  // lattice, which bounds each coordinate independently.
  //
  // cut3 = 3*cutoff rounded down to an integer (beta_theta is an integer).
  Rational c = cutoff;
  long cut = c.num() / c.den(); // floor for nonnegative cutoff
  std::vector<Degree> out;
  auto sup_max = int(cut / 3); // beta_v <= cutoff/3 in thirds: 3 beta_v <= cut
  std::array<std::vector<int>, 4> choices;
  for (int v = 0; v < 3; ++v) {
    choices[v].clear();
    if (theta.is_superscript(Var(v))) {
      for (int k = 0; k <= sup_max; ++k) choices[v].push_back(3 * k);
    } else {
      // -3 beta_v - 1 <= cut, beta_v in (1/3)Z_{<0} \ Z
      for (int t = -1; -t - 1 <= cut; --t)
        if (t % 3 != 0) choices[v].push_back(t);
    }
  }
  for (int t = 0; t <= cut; ++t) choices[3].push_back(t);

  for (int x3 : choices[0])
    for (int y3 : choices[1])
      for (int z3 : choices[2])
        for (int a3 : choices[3]) {
          Degree d = Degree::from_thirds(x3, y3, z3, a3);
          Rational bt = beta_theta(d, 1, theta);
          if (bt <= cutoff) out.push_back(d);
        }

  std::sort(out.begin(), out.end(), [&](const Degree& p, const Degree& q) {
    Rational bp = beta_theta(p, 1, theta);
    Rational bq = beta_theta(q, 1, theta);
    if (bp != bq) return bp < bq;
    return p < q;
  });
  return out;
}

} // namespace glsm
