#include "glsm/wall_crossing.hpp"

#include <cmath>
#include <cstdlib>

namespace glsm {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const Complex kTwoPiI(0.0, 2.0 * kPi);

Complex root_of_unity(const Rational& f) {
  double x = 2.0 * kPi * f.to_double();
  return {std::cos(x), std::sin(x)};
}

} // namespace

ConnectionCoeffs connection_coeffs(const Rational& frac_bv, const Rational& frac_ba) {
  Rational fv = frac_part(frac_bv);
  Rational fa = frac_part(frac_ba);
  if (fv == Rational(0)) throw VanishingTerm("integer beta_v residue vanishes");
  if (fv == fa) throw VanishingTerm("beta_v - beta_a integral: residue cancels");

  Complex e = root_of_unity(fv);
  Complex em1 = e - 1.0;
  Complex g1a = gamma_fn(Complex(1.0 - fa.to_double(), 0.0));
  Complex pref = -kTwoPiI / (3.0 * gamma_fn(Complex(frac_part(fv - fa).to_double(), 0.0)) *
                             std::pow(gamma_fn(Complex(fv.to_double(), 0.0)), 2.0));
  ConnectionCoeffs out;
  out.c0 = pref * g1a / em1;
  out.c1 = pref * (kTwoPiI * e * g1a / (em1 * em1) + g1a * h_constant(fa) / em1);
  return out;
}

AmbientClass<Complex> gamma_form_coefficient(const Degree& beta, const ChamberChar& theta,
                                             Complex hbar) {
  if (hbar == Complex(0.0, 0.0)) throw ZeroHbar("hbar must be nonzero");
  NilPoly<Complex> poly(gamma_factor_a(beta.a()));
  Complex inv_hbar = 1.0 / hbar;
  for (int v = 0; v < 3; ++v) {
    Rational bv = beta.component(v);
    if (theta.is_superscript(Var(v))) {
      DualNum f = gamma_factor_super(bv.num() / bv.den(), beta.a(), Complex(1.0, 0.0));
      // dual slope is per unit of H_v/hbar
      NilPoly<Complex> factor(f.a);
      factor += NilPoly<Complex>::monomial(1 << v, f.b * inv_hbar);
      poly *= factor;
    } else {
      if ((bv - beta.a()).is_integer()) return {}; // vanishing subscript factor
      poly *= NilPoly<Complex>(gamma_factor_sub(bv, beta.a()));
    }
  }
  return AmbientClass<Complex>(SectorLabel::from_degree_fracs(beta), poly);
}

ContinuedSeries continue_series(const ChamberChar& theta, Var v, Complex hbar,
                                const Rational& cutoff) {
  if (!theta.is_superscript(v)) throw BadArgument("continuation variable must be superscript");
  std::array<int, 4> signs{};
  for (int i = 0; i < 4; ++i) signs[i] = theta.exponent(i);
  signs[int(v)] = -signs[int(v)];
  ChamberChar target = ChamberChar::from_signs(signs);

  ContinuedSeries out;
  out.source = theta;
  out.target = target;
  out.moved = v;
  out.hbar = hbar;
  out.cutoff = cutoff;

  const ChamberTable& src_table = ChamberTable::get(theta);
  const ChamberTable& tgt_table = ChamberTable::get(target);
  Complex inv_hbar = 1.0 / hbar;
  auto iso = state_iso_slots(theta, target);

  for (const Degree& beta : enumerate_ifunction_degrees(target, cutoff)) {
    Rational bv = beta.component(int(v));
    if ((bv - beta.a()).is_integer()) continue; // residue cancels
    AmbientClass<Complex> gform = gamma_form_coefficient(beta, target, hbar);
    if (gform.is_zero()) continue;

    ConnectionCoeffs cc = connection_coeffs(frac_part(bv), frac_part(beta.a()));

    // Continued coefficient: [c0 + c1 H_v/hbar] times the Gamma-ratio factor
    // product, attached to the source-chamber sector with the v-twist erased.
    SectorLabel tgt_sector = SectorLabel::from_degree_fracs(beta);
    SectorLabel src_sector = tgt_sector;
    src_sector.thirds[int(v)] = 0;
    NilPoly<Complex> gform_poly;
    for (const auto& [label, p] : gform.terms()) gform_poly += p;
    NilPoly<Complex> cont_poly =
        (NilPoly<Complex>(cc.c0) + NilPoly<Complex>::monomial(1 << int(v), cc.c1 * inv_hbar)) *
        gform_poly;

    // Direct target coefficient through the independent Euler-product route,
    // rescaled to the Gamma normalization.
    AmbientClass<Complex> euler = i_coefficient(beta, target, hbar);
    long s3 = beta.thirds[0] + beta.thirds[1] + beta.thirds[2];
    Complex sign = (s3 % 2 == 0) ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
    Complex scale =
        sign * std::pow(hbar, -double(hbar_weight(beta, target) -
                                      a_insertion_count(beta, target)));
    NilPoly<Complex> direct_poly;
    for (const auto& [label, p] : euler.terms()) direct_poly += p;
    AmbientClass<Complex> direct(tgt_sector, NilPoly<Complex>(scale) * direct_poly);

    ContinuedTerm term;
    term.beta = beta;
    term.continued = reduce_to_state(AmbientClass<Complex>(src_sector, cont_poly), theta);
    term.direct_target = reduce_to_state(direct, target);

    // expected = U(direct): slot j of the target feeds c0 into its
    // H_v-free partner and c1/hbar into the H_v partner.
    for (int j = 0; j < kStateDim; ++j) {
      Complex dj = term.direct_target.coeff[j];
      if (dj == Complex(0.0, 0.0)) continue;
      const BasisSlot& slot = tgt_table.basis()[j];
      SectorLabel old_sector = slot.sector;
      old_sector.thirds[int(v)] = 0;
      int i0 = src_table.slot_index(old_sector, slot.monomial);
      if (i0 >= 0) term.expected.coeff[i0] += cc.c0 * dj;
      int i1 = src_table.slot_index(old_sector, slot.monomial | (1 << int(v)));
      if (i1 >= 0) term.expected.coeff[i1] += cc.c1 * inv_hbar * dj;
    }

    for (int i = 0; i < kStateDim; ++i) term.mapped.coeff[iso[i]] = term.continued.coeff[i];

    double num = 0.0, den = 0.0;
    for (int i = 0; i < kStateDim; ++i) {
      num = std::max(num, std::abs(term.continued.coeff[i] - term.expected.coeff[i]));
      den = std::max(den, std::abs(term.expected.coeff[i]));
    }
    term.rel_error = den > 0.0 ? num / den : num;
    out.max_rel_error = std::max(out.max_rel_error, term.rel_error);
    out.terms.push_back(std::move(term));
  }
  return out;
}

LgcyMatrix extract_lgcy_matrix(const ChamberChar& theta, const ChamberChar& theta_prime,
                               const Rational& cutoff, Complex hbar) {
  if (hbar == Complex(0.0, 0.0)) throw ZeroHbar("hbar must be nonzero");
  LgcyMatrix out;
  out.source = theta;
  out.target = theta_prime;
  out.cutoff = cutoff;

  if (theta == theta_prime) {
    for (int i = 0; i < kStateDim; ++i) out.entries[i][i] = Complex(1.0, 0.0);
    return out;
  }

  int moved = -1;
  for (int v = 0; v < 3; ++v) {
    if (theta.exponent(v) != theta_prime.exponent(v)) {
      if (moved >= 0) throw NotAdjacent("chambers differ in more than one variable");
      moved = v;
    }
  }
  if (moved < 0) throw NotAdjacent("chambers do not differ");
  bool forward = theta.is_superscript(Var(moved)); // superscript -> subscript move

  const ChamberChar& sup_side = forward ? theta : theta_prime;
  const ChamberChar& sub_side = forward ? theta_prime : theta;
  const ChamberTable& sup_table = ChamberTable::get(sup_side);
  const ChamberTable& sub_table = ChamberTable::get(sub_side);
  auto iso = state_iso_slots(sup_side, sub_side);

  // Raw entries in the superscript -> subscript direction; the reverse move
  // uses the inverse values on the transposed pairs.
  for (int i = 0; i < kStateDim; ++i) {
    const BasisSlot& src = sup_table.basis()[i];
    int j = iso[i];
    const BasisSlot& dst = sub_table.basis()[j];
    Rational fv(dst.sector.thirds[moved], 3);
    Rational fa(dst.sector.thirds[3], 3);
    ConnectionCoeffs cc = connection_coeffs(fv, fa);
    bool has_h = (src.monomial >> moved) & 1;
    Complex value = has_h ? cc.c1 / hbar : cc.c0;
    if (forward)
      out.entries[j][i] = value;
    else
      out.entries[i][j] = 1.0 / value;
  }
  return out;
}

namespace {

// Complex log-gamma, right half plane only (all contour arguments stay there).
Complex log_gamma_right(Complex z) {
  static const double p[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                              771.32342877765313,   -176.61502916214059, 12.507343278686905,
                              -0.13857109526572012, 9.9843695780195716e-6,
                              1.5056327351493116e-7};
  z -= 1.0;
  Complex x = p[0];
  for (int i = 1; i < 9; ++i) x += p[i] / (z + Complex(double(i), 0.0));
  Complex t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

struct MbIntegrand {
  Complex log_base; // log(q / 3^6)
  double beta_a;

  Complex operator()(Complex s) const {
    Complex expo = s * log_base + log_gamma_right(1.0 + 3.0 * s) -
                   log_gamma_right(1.0 + s - beta_a) - 2.0 * log_gamma_right(1.0 + s);
    Complex arg = kTwoPiI * s;
    // 1/(e^{2 pi i s} - 1) ~ e^{-arg} when the exponential would overflow
    if (arg.real() > 300.0) return std::exp(expo - arg);
    return std::exp(expo) / (std::exp(arg) - 1.0);
  }
};

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr int kGlN = 16;
constexpr double kGlX[kGlN] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
    0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
constexpr double kGlW[kGlN] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
    0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550685,
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

template <typename F>
Complex gauss_segment(const F& f, Complex a, Complex b) {
  Complex mid = 0.5 * (a + b);
  Complex half = 0.5 * (b - a);
  Complex sum(0.0, 0.0);
  for (int i = 0; i < kGlN; ++i) sum += kGlW[i] * f(mid + kGlX[i] * half);
  return sum * half;
}

double quadrature_tolerance() {
  if (const char* env = std::getenv("GLSM_PRECISION")) {
    double v = std::atof(env);
    if (v > 0.0) return v;
  }
  return 1e-9;
}

} // namespace

MellinBarnesResult mellin_barnes_oracle(Complex q, const Rational& frac_ba, int n_terms) {
  if (std::abs(q) >= 27.0) throw OutOfRegion("|q| must be < 27");
  if (q.imag() == 0.0 && q.real() <= 0.0)
    throw OutOfRegion("q on the closed negative real axis is rejected");
  double fa = frac_part(frac_ba).to_double();

  MbIntegrand f{std::log(q) - 6.0 * std::log(3.0), fa};

  // Contour: vertical segment through Re(s) = -1/6 between -iT0 and +iT0,
  // then 45-degree rays into the right half plane, where the integrand
  // decays like |q/27|^{Re s}.
  const double tol = quadrature_tolerance();
  const double t0 = 1.0;
  const Complex anchor_up(-1.0 / 6.0, t0);
  const Complex anchor_dn(-1.0 / 6.0, -t0);
  const Complex dir_up = std::polar(1.0, kPi / 4.0);
  const Complex dir_dn = std::polar(1.0, -kPi / 4.0);

  Complex integral(0.0, 0.0);
  // vertical piece, upward
  {
    int panels = 8;
    Complex a = anchor_dn;
    Complex step = (anchor_up - anchor_dn) / double(panels);
    for (int i = 0; i < panels; ++i) integral += gauss_segment(f, a + double(i) * step, a + double(i + 1) * step);
  }
  // rays: fixed-length panels until the contribution falls below tolerance
  const double panel_len = 2.0;
  const int max_panels = 400;
  for (int ray = 0; ray < 2; ++ray) {
    Complex anchor = ray == 0 ? anchor_up : anchor_dn;
    Complex dir = ray == 0 ? dir_up : dir_dn;
    double sgn = ray == 0 ? 1.0 : -1.0; // downward ray is traversed toward the anchor
    for (int k = 0; k < max_panels; ++k) {
      Complex a = anchor + double(k) * panel_len * dir;
      Complex b = anchor + double(k + 1) * panel_len * dir;
      Complex piece = gauss_segment(f, a, b);
      integral += sgn * piece;
      if (std::abs(piece) < tol * 1e-3 && k > 2) break;
    }
  }

  MellinBarnesResult out;
  // The rightward closure encircles the poles s = 0..inf clockwise, so the
  // upward line integral equals minus the residue sum.
  out.quadrature = -integral;
  Complex sum(0.0, 0.0);
  for (int n = 0; n <= n_terms; ++n) {
    Complex term = std::exp(double(n) * f.log_base + log_gamma_right(Complex(1.0 + 3.0 * n, 0.0)) -
                            log_gamma_right(Complex(1.0 + n - fa, 0.0)) -
                            2.0 * log_gamma_right(Complex(1.0 + n, 0.0)));
    sum += term;
  }
  out.partial_sum = sum;
  return out;
}

} // namespace glsm
