#pragma once

#include <complex>
#include <map>
#include <vector>

#include "glsm/gamma.hpp"
#include "glsm/iseries.hpp"
#include "glsm/state_space.hpp"

namespace glsm {

// Connection coefficients of the one-variable analytic continuation, indexed
// by the fractional parts (<beta_v>, <beta_a>). c0 multiplies the image of
// the 1-slot, c1/hbar the image of the H_v-slot.
struct ConnectionCoeffs {
  Complex c0{};
  Complex c1{};
};

ConnectionCoeffs connection_coeffs(const Rational& frac_bv, const Rational& frac_ba);

// Givental-normalized coefficient of the series at degree beta, assembled
// from the Gamma-ratio factor forms (superscript, subscript and a-factors).
// Equals the Euler-product coefficient times hbar^{w(beta)}. Zero class at
// degrees where a subscript factor vanishes (beta_v - beta_a integral).
AmbientClass<Complex> gamma_form_coefficient(const Degree& beta, const ChamberChar& theta,
                                             Complex hbar);

// One degree of the continued series, still expressed in the source-chamber
// state space, together with the directly-built target coefficient and the
// expected value U(direct) it must equal.
struct ContinuedTerm {
  Degree beta;
  StateClassC continued;     // over H(theta)
  StateClassC direct_target; // over H(theta'), Gamma-normalized
  StateClassC expected;      // U(direct_target) over H(theta)
  StateClassC mapped;        // continued pushed to H(theta') by the slot bijection
  double rel_error = 0.0;
};

struct ContinuedSeries {
  ChamberChar source = chamber_xyza();
  ChamberChar target = chamber_xyza();
  Var moved = Var::X;
  Complex hbar{};
  Rational cutoff = Rational(0);
  std::vector<ContinuedTerm> terms;
  double max_rel_error = 0.0;
};

// Analytic continuation of the Givental series of `theta` in the superscript
// variable v: replaces the integer beta_v-sum by the fractional negative
// lattice of the adjacent chamber, each term carrying [c0 + c1 H_v/hbar]
// times the subscript factor. Terms with beta_v - beta_a integral vanish and
// are omitted.
ContinuedSeries continue_series(const ChamberChar& theta, Var v, Complex hbar,
                                const Rational& cutoff);

// 10x10 transformation between adjacent chamber state spaces: each slot maps
// to its basis partner scaled by raw c0 (H_v-free slots) or c1/hbar (H_v
// slots). Degree-block diagonal and invertible by construction.
struct LgcyMatrix {
  ChamberChar source = chamber_xyza();
  ChamberChar target = chamber_xyza();
  Rational cutoff = Rational(0);
  std::array<std::array<Complex, kStateDim>, kStateDim> entries{}; // [row][col]

  StateClassC apply(const StateClassC& c) const {
    StateClassC out;
    for (int r = 0; r < kStateDim; ++r)
      for (int c_i = 0; c_i < kStateDim; ++c_i)
        out.coeff[r] += entries[r][c_i] * c.coeff[c_i];
    return out;
  }
};

LgcyMatrix extract_lgcy_matrix(const ChamberChar& theta, const ChamberChar& theta_prime,
                               const Rational& cutoff, Complex hbar);

// Scalar Mellin-Barnes self-check: the contour integral along Re(s) = -1/6
// against the partial residue sum over s = 0..N. The series variable is
// normalized so its true convergence boundary sits at |q| = 27.
struct MellinBarnesResult {
  Complex quadrature{};
  Complex partial_sum{};
};

MellinBarnesResult mellin_barnes_oracle(Complex q, const Rational& frac_ba, int n_terms);

} // namespace glsm
