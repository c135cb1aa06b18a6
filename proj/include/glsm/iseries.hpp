#pragma once

#include <complex>
#include <map>

#include "glsm/degrees.hpp"
#include "glsm/orbi.hpp"
#include "glsm/state_space.hpp"

namespace glsm {

// Exponent of (q_x, q_y, q_z, q_a) relative to the extremal shift: the term
// at degree beta is keyed by beta - beta_0(theta, 1), stored in thirds. The
// leading term sits at key zero; subscript entries are nonpositive (the
// series lives in inverse powers of those variables), a-entries nonnegative.
using ExponentKey = std::array<int, 4>;

// Polynomial of degree <= 1 in each L_v = log q_v (superscript v only),
// keyed by the subset mask of L-variables present.
template <typename T>
using LogPoly = std::map<int, AmbientClass<T>>;

template <typename T>
struct ISeries {
  ChamberChar chamber = chamber_xyza();
  T hbar{};
  Rational cutoff = Rational(0);
  bool givental = false;
  std::map<ExponentKey, LogPoly<T>> terms;

  static ExponentKey key_for(const Degree& beta, const ChamberChar& theta) {
    Degree shifted = beta - extremal_degree(theta, 1);
    return shifted.thirds;
  }
  static Degree degree_for(const ExponentKey& key, const ChamberChar& theta) {
    Degree d{key};
    return d + extremal_degree(theta, 1);
  }
};

using ISeriesQ = ISeries<Rational>;
using ISeriesC = ISeries<std::complex<double>>;

// Plain truncated series: one term per lattice degree with beta_theta <=
// cutoff, coefficient from the Euler-product kernel on sector <-beta>.
// No log terms.
template <typename T>
ISeries<T> build_i_series(const ChamberChar& theta, const T& hbar, const Rational& cutoff) {
  if (ScalarTraits<T>::is_zero(hbar)) throw ZeroHbar("hbar must be nonzero");
  ISeries<T> out;
  out.chamber = theta;
  out.hbar = hbar;
  out.cutoff = cutoff;
  for (const Degree& beta : enumerate_ifunction_degrees(theta, cutoff)) {
    AmbientClass<T> c = i_coefficient(beta, theta, hbar);
    if (c.is_zero()) continue;
    out.terms[ISeries<T>::key_for(beta, theta)][0] = c;
  }
  return out;
}

// Givental dressing: the sign (-1)^{3(beta_x+beta_y+beta_z)}, the sector
// inversion <-beta> -> <beta>, and the exact expansion of q^{H_v/hbar} as
// 1 + (L_v/hbar) H_v for each superscript variable.
template <typename T>
ISeries<T> build_givental(const ChamberChar& theta, const T& hbar, const Rational& cutoff) {
  if (ScalarTraits<T>::is_zero(hbar)) throw ZeroHbar("hbar must be nonzero");
  ISeries<T> out;
  out.chamber = theta;
  out.hbar = hbar;
  out.cutoff = cutoff;
  out.givental = true;
  T inv_hbar = T(1) / hbar;
  auto sup = theta.superscript_vars();
  for (const Degree& beta : enumerate_ifunction_degrees(theta, cutoff)) {
    AmbientClass<T> base = i_coefficient(beta, theta, hbar);
    if (base.is_zero()) continue;
    long s3 = beta.thirds[0] + beta.thirds[1] + beta.thirds[2]; // 3(bx+by+bz)
    T sign = (s3 % 2 == 0) ? T(1) : T(-1);
    SectorLabel sector = SectorLabel::from_degree_fracs(beta);
    NilPoly<T> poly;
    for (const auto& [label, p] : base.terms()) poly += p; // single term
    poly = NilPoly<T>(sign) * poly;

    LogPoly<T>& lp = out.terms[ISeries<T>::key_for(beta, theta)];
    int nsup = int(sup.size());
    for (int subset = 0; subset < (1 << nsup); ++subset) {
      NilPoly<T> dressed = poly;
      int lmask = 0;
      for (int i = 0; i < nsup; ++i) {
        if (!(subset & (1 << i))) continue;
        lmask |= 1 << int(sup[i]);
        dressed *= NilPoly<T>::generator(int(sup[i])) * inv_hbar;
      }
      if (dressed.is_zero()) continue;
      lp[lmask] = AmbientClass<T>(sector, dressed);
    }
  }
  return out;
}

// Numeric evaluation at a q-point on the principal branch, reduced to the
// chamber state space.
StateClassC evaluate(const ISeriesC& series, const std::array<std::complex<double>, 4>& q);

} // namespace glsm
