#include "glsm/model.hpp"

#include <sstream>

namespace glsm {

const GlsmModel& GlsmModel::instance() {
  static const GlsmModel model = [] {
    GlsmModel m;
    m.coord_names = {"x0", "x1", "x2", "y0", "y1", "y2", "z0",
                     "z1", "z2", "a",  "px", "py", "pz"};
    m.weights = {{
        {1, 0, 0, -1, 0},  // x0
        {1, 0, 0, 0, 0},   // x1
        {1, 0, 0, 0, 0},   // x2
        {0, 1, 0, -1, 0},  // y0
        {0, 1, 0, 0, 0},   // y1
        {0, 1, 0, 0, 0},   // y2
        {0, 0, 1, -1, 0},  // z0
        {0, 0, 1, 0, 0},   // z1
        {0, 0, 1, 0, 0},   // z2
        {0, 0, 0, 3, 0},   // a
        {-3, 0, 0, 0, 1},  // px
        {0, -3, 0, 0, 1},  // py
        {0, 0, -3, 0, 1},  // pz
    }};
    return m;
  }();
  return model;
}

namespace {

int sign_of(int e) { return e > 0 ? 1 : (e < 0 ? -1 : 0); }

std::array<int, 4> parse_entries(std::string spec) {
  if (spec.size() >= 2 && spec.front() == '(' && spec.back() == ')')
    spec = spec.substr(1, spec.size() - 2);
  std::array<int, 4> out{};
  if (spec.find(',') == std::string::npos) {
    if (spec.size() != 4) throw BadArgument("chamber spec needs 4 entries: " + spec);
    for (int i = 0; i < 4; ++i) {
      char c = spec[i];
      if (c == '+')
        out[i] = 1;
      else if (c == '-')
        out[i] = -1;
      else if (c == '0')
        out[i] = 0;
      else
        throw BadArgument(std::string("bad sign character '") + c + "' in " + spec);
    }
    return out;
  }
  std::stringstream ss(spec);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 4) throw BadArgument("chamber spec needs 4 entries: " + spec);
    if (tok == "+")
      out[i] = 1;
    else if (tok == "-")
      out[i] = -1;
    else {
      try {
        out[i] = std::stoi(tok);
      } catch (const std::exception&) {
        throw BadArgument("bad chamber entry '" + tok + "'");
      }
    }
    ++i;
  }
  if (i != 4) throw BadArgument("chamber spec needs 4 entries: " + spec);
  return out;
}

} // namespace

ChamberChar ChamberChar::parse(const std::string& spec) {
  return from_signs(parse_entries(spec));
}

ChamberChar ChamberChar::from_signs(const std::array<int, 4>& entries) {
  std::array<int, 4> e{};
  for (int i = 0; i < 4; ++i) {
    int s = sign_of(entries[i]);
    if (s == 0) throw WallCharacter("wall character: zero exponent at position " + std::to_string(i));
    e[i] = 3 * s;
  }
  if (e[3] < 0) throw UnsupportedChamber("chambers with a in the subscript are not supported");
  return ChamberChar(e);
}

std::vector<Var> ChamberChar::superscript_vars() const {
  std::vector<Var> out;
  for (int v = 0; v < 3; ++v)
    if (exponents_[v] > 0) out.push_back(Var(v));
  return out;
}

std::vector<Var> ChamberChar::subscript_vars() const {
  std::vector<Var> out;
  for (int v = 0; v < 3; ++v)
    if (exponents_[v] < 0) out.push_back(Var(v));
  return out;
}

int ChamberChar::num_subscripts() const { return int(subscript_vars().size()); }

std::string ChamberChar::sign_pattern() const {
  std::string s;
  for (int e : exponents_) s += (e > 0 ? '+' : '-');
  return s;
}

std::string ChamberChar::name() const {
  static const char* names = "xyz";
  std::string sup, sub;
  for (int v = 0; v < 3; ++v) (exponents_[v] > 0 ? sup : sub) += names[v];
  sup += 'a';
  std::string out = "theta^{" + sup + "}";
  if (!sub.empty()) out += "_{" + sub + "}";
  return out;
}

ChamberChar chamber_xyza() { return ChamberChar::from_signs({1, 1, 1, 1}); }
ChamberChar chamber_xya_z() { return ChamberChar::from_signs({1, 1, -1, 1}); }
ChamberChar chamber_xa_yz() { return ChamberChar::from_signs({1, -1, -1, 1}); }
ChamberChar chamber_a_xyz() { return ChamberChar::from_signs({-1, -1, -1, 1}); }

const std::vector<ChamberChar>& canonical_chambers() {
  static const std::vector<ChamberChar> all = {chamber_xyza(), chamber_xya_z(),
                                               chamber_xa_yz(), chamber_a_xyz()};
  return all;
}

std::string UnstableComponent::describe() const {
  const auto& names = GlsmModel::instance().coord_names;
  std::string s = "{";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) s += "=";
    s += names[coords[i]];
  }
  s += "=0}";
  return s;
}

std::vector<UnstableComponent> unstable_components(const ChamberChar& theta) {
  std::vector<UnstableComponent> out;
  for (int v = 0; v < 3; ++v) {
    if (theta.is_superscript(Var(v)))
      out.push_back({{3 * v, 3 * v + 1, 3 * v + 2}});
    else
      out.push_back({{kPx + v}});
  }
  out.push_back({{kA}});
  return out;
}

bool is_semistable(const std::array<std::complex<double>, kNumCoords>& point,
                   const ChamberChar& theta) {
  for (const auto& comp : unstable_components(theta)) {
    bool all_zero = true;
    for (int c : comp.coords)
      if (point[c] != std::complex<double>(0.0, 0.0)) {
        all_zero = false;
        break;
      }
    if (all_zero) return false;
  }
  return true;
}

std::string DivisorForm::str() const {
  static const char* names[3] = {"Hx", "Hy", "Hz"};
  std::string s;
  for (int v = 0; v < 3; ++v) {
    if (coeff[v] == 0) continue;
    if (!s.empty() && coeff[v] > 0) s += "+";
    if (coeff[v] == -1)
      s += "-";
    else if (coeff[v] != 1)
      s += std::to_string(coeff[v]) + "*";
    s += names[v];
  }
  return s.empty() ? "0" : s;
}

DivisorForm toric_divisor(int rho, const ChamberChar& theta) {
  if (rho < 0 || rho >= kNumCoords) throw BadArgument("character index out of range");
  const auto& w = GlsmModel::instance().weights[rho];
  DivisorForm d;
  for (int v = 0; v < 3; ++v)
    if (theta.is_superscript(Var(v))) d.coeff[v] = w[v];
  return d;
}

} // namespace glsm
