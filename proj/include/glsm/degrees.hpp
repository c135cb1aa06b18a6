#pragma once

#include <array>
#include <string>
#include <vector>

#include "glsm/model.hpp"
#include "glsm/rational.hpp"

namespace glsm {

// A degree tuple (beta_x, beta_y, beta_z, beta_a), stored as integer thirds
// so the lattice arithmetic stays exact: thirds[i] = 3*beta_i.
struct Degree {
  std::array<int, 4> thirds{0, 0, 0, 0};

  static Degree from_thirds(int x3, int y3, int z3, int a3) { return Degree{{x3, y3, z3, a3}}; }

  Rational component(int i) const { return Rational(thirds[i], 3); }
  Rational x() const { return component(0); }
  Rational y() const { return component(1); }
  Rational z() const { return component(2); }
  Rational a() const { return component(3); }

  friend Degree operator+(const Degree& p, const Degree& q) {
    return Degree{{p.thirds[0] + q.thirds[0], p.thirds[1] + q.thirds[1],
                   p.thirds[2] + q.thirds[2], p.thirds[3] + q.thirds[3]}};
  }
  friend Degree operator-(const Degree& p, const Degree& q) {
    return Degree{{p.thirds[0] - q.thirds[0], p.thirds[1] - q.thirds[1],
                   p.thirds[2] - q.thirds[2], p.thirds[3] - q.thirds[3]}};
  }
  Degree operator-() const {
    return Degree{{-thirds[0], -thirds[1], -thirds[2], -thirds[3]}};
  }
  friend bool operator==(const Degree& p, const Degree& q) { return p.thirds == q.thirds; }
  friend bool operator!=(const Degree& p, const Degree& q) { return !(p == q); }
  friend bool operator<(const Degree& p, const Degree& q) { return p.thirds < q.thirds; }

  std::string str() const {
    return "(" + component(0).str() + "," + component(1).str() + "," + component(2).str() +
           "," + component(3).str() + ")";
  }
};

// Degree of L_rho for a weight vector (t_x,t_y,t_z,t_a,t_R): the t_R-weight
// pairs with deg(omega_log) = m-2. Returned exactly.
Rational beta_rho(const std::array<int, kNumWeights>& weight, const Degree& beta, int m);
Rational beta_rho(int rho, const Degree& beta, int m);

// beta_0(theta, m): (m-2)/3 at each subscript variable, 0 elsewhere.
Degree extremal_degree(const ChamberChar& theta, int m);

// Pairing with the lifted character: sum_v e_v beta_v + e_a beta_a + s(m-2),
// s the number of subscript variables. Integer on the enumeration lattice.
Rational beta_theta(const Degree& beta, int m, const ChamberChar& theta);

// The necessary effectiveness conditions plus integrality of beta_theta.
bool passes_effectiveness(const Degree& beta, int m, const ChamberChar& theta);

struct Epsilon {
  enum Kind { ZeroPlus, Finite, Infinity } kind = Finite;
  Rational value = Rational(1);

  static Epsilon zero_plus() { return {ZeroPlus, Rational(0)}; }
  static Epsilon infinity() { return {Infinity, Rational(0)}; }
  static Epsilon finite(const Rational& v) { return {Finite, v}; }
};

bool is_unstable_tuple(const Degree& beta, int m, const Epsilon& eps, const ChamberChar& theta);

// All degrees in the m=1 summation lattice of the I-series with
// beta_theta <= cutoff, sorted by (beta_theta, lexicographic). Membership:
// superscript v: beta_v in Z_{>=0}; subscript v: beta_v in (1/3)Z_{<0} \ Z;
// beta_a in (1/3)Z_{>=0}.
std::vector<Degree> enumerate_ifunction_degrees(const ChamberChar& theta, const Rational& cutoff);

} // namespace glsm
