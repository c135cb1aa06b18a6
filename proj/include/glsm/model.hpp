#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "glsm/errors.hpp"

namespace glsm {

// The fixed model: 13 coordinates acted on by (C*)^4 x C*_R. Each row is the
// (t_x, t_y, t_z, t_a, t_R)-weight of one coordinate.
inline constexpr int kNumCoords = 13;
inline constexpr int kNumWeights = 5;

enum Coord : int {
  kX0 = 0, kX1, kX2,
  kY0, kY1, kY2,
  kZ0, kZ1, kZ2,
  kA,
  kPx, kPy, kPz,
};

// Variable groups x, y, z (index 0,1,2); 'a' is handled separately.
enum class Var : int { X = 0, Y = 1, Z = 2 };

struct GlsmModel {
  std::array<std::string, kNumCoords> coord_names;
  std::array<std::array<int, kNumWeights>, kNumCoords> weights;

  static const GlsmModel& instance();
};

// Superpotential recorded for documentation only:
//   W = p_x(a x0^3 + x1^3 + x2^3) + p_y(a y0^3 + y1^3 + y2^3)
//     + p_z(a z0^3 + z1^3 + z2^3),  C*_R-homogeneous of degree 1.
inline constexpr const char* kSuperpotential =
    "p_x(a*x0^3+x1^3+x2^3) + p_y(a*y0^3+y1^3+y2^3) + p_z(a*z0^3+z1^3+z2^3)";

// A chamber character of (C*)^4, canonicalized to exponents +-3. Wall
// characters (a zero exponent) and a-subscript chambers are rejected.
class ChamberChar {
public:
  // Accepts "++-+", "+,+,-,+", or "3,3,-3,3".
  static ChamberChar parse(const std::string& spec);
  static ChamberChar from_signs(const std::array<int, 4>& signs);

  const std::array<int, 4>& exponents() const { return exponents_; }
  int exponent(int i) const { return exponents_[i]; }

  bool is_superscript(Var v) const { return exponents_[int(v)] > 0; }
  bool is_subscript(Var v) const { return exponents_[int(v)] < 0; }
  std::vector<Var> superscript_vars() const;
  std::vector<Var> subscript_vars() const;
  int num_subscripts() const;

  // "+ + - +" pattern string, e.g. "++-+".
  std::string sign_pattern() const;
  // Name in the theta^{sup}_{sub} style, e.g. "theta^{xya}_{z}".
  std::string name() const;

  friend bool operator==(const ChamberChar& a, const ChamberChar& b) {
    return a.exponents_ == b.exponents_;
  }
  friend bool operator!=(const ChamberChar& a, const ChamberChar& b) { return !(a == b); }
  friend bool operator<(const ChamberChar& a, const ChamberChar& b) {
    return a.exponents_ < b.exponents_;
  }

private:
  explicit ChamberChar(const std::array<int, 4>& e) : exponents_(e) {}
  std::array<int, 4> exponents_{};
};

// The four canonical chambers.
ChamberChar chamber_xyza();
ChamberChar chamber_xya_z();
ChamberChar chamber_xa_yz();
ChamberChar chamber_a_xyz();
const std::vector<ChamberChar>& canonical_chambers();

// One irreducible component of the unstable locus, as the list of coordinate
// indices that vanish on it.
struct UnstableComponent {
  std::vector<int> coords;
  std::string describe() const;
};

std::vector<UnstableComponent> unstable_components(const ChamberChar& theta);

bool is_semistable(const std::array<std::complex<double>, kNumCoords>& point,
                   const ChamberChar& theta);

// Integer combination of the hyperplane classes H_x, H_y, H_z.
struct DivisorForm {
  std::array<int, 3> coeff{0, 0, 0};

  bool is_zero() const { return coeff[0] == 0 && coeff[1] == 0 && coeff[2] == 0; }
  friend bool operator==(const DivisorForm& a, const DivisorForm& b) {
    return a.coeff == b.coeff;
  }
  std::string str() const;
};

// D_rho for rho in R: the t_v-weights paired with H_v, where H_v := 0 for
// subscript v and the t_a-, t_R-weights contribute nothing.
DivisorForm toric_divisor(int rho, const ChamberChar& theta);

} // namespace glsm
