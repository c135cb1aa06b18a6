#include "glsm/json_io.hpp"

#include <cstdio>

namespace glsm {

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Json complex_pair(std::complex<double> z) {
  return Json::array({std::stod(fmt17(z.real())), std::stod(fmt17(z.imag()))});
}

} // namespace

Json to_json(const Rational& r) { return r.str(); }
Json to_json(std::complex<double> z) { return complex_pair(z); }

Json to_json(const ChamberChar& theta) {
  Json j;
  j["exponents"] = theta.exponents();
  Json subs = Json::array();
  static const char* names = "xyz";
  for (Var v : theta.subscript_vars()) subs.push_back(std::string(1, names[int(v)]));
  j["subscript"] = subs;
  return j;
}

Json to_json(const SectorLabel& s) {
  Json arr = Json::array();
  for (int i = 0; i < 4; ++i) arr.push_back(Rational(s.thirds[i], 3).str());
  return arr;
}

namespace {

template <typename T, typename CoeffFn>
Json nilpoly_json(const NilPoly<T>& p, CoeffFn&& coeff) {
  Json arr = Json::array();
  for (int m = 0; m < kNumMonomials; ++m) {
    if (ScalarTraits<T>::is_zero(p[m])) continue;
    Json term;
    Json mono = Json::array();
    static const char* names[3] = {"Hx", "Hy", "Hz"};
    for (int v = 0; v < 3; ++v)
      if (m & (1 << v)) mono.push_back(names[v]);
    term["monomial"] = mono;
    term["coeff"] = coeff(p[m]);
    arr.push_back(term);
  }
  return arr;
}

Json rational_coeff(const Rational& r) {
  Json c;
  c["num"] = std::to_string(r.num());
  c["den"] = std::to_string(r.den());
  return c;
}

} // namespace

Json nilpoly_to_json(const NilPolyQ& p) { return nilpoly_json(p, rational_coeff); }
Json nilpoly_to_json(const NilPolyC& p) {
  return nilpoly_json(p, [](std::complex<double> z) { return complex_pair(z); });
}

Json ambient_to_json(const AmbientClass<Rational>& c) {
  Json arr = Json::array();
  for (const auto& [sector, poly] : c.terms()) {
    Json t;
    t["sector"] = to_json(sector);
    t["terms"] = nilpoly_to_json(poly);
    arr.push_back(t);
  }
  return arr;
}

Json ambient_to_json(const AmbientClass<std::complex<double>>& c) {
  Json arr = Json::array();
  for (const auto& [sector, poly] : c.terms()) {
    Json t;
    t["sector"] = to_json(sector);
    t["terms"] = nilpoly_to_json(poly);
    arr.push_back(t);
  }
  return arr;
}

namespace {

template <typename T>
Json series_json(const ISeries<T>& s, Json (*hbar_json)(const T&)) {
  Json j;
  j["chamber"] = to_json(s.chamber);
  j["hbar"] = hbar_json(s.hbar);
  j["cutoff"] = s.cutoff.str();
  j["givental"] = s.givental;
  Json terms = Json::array();
  for (const auto& [key, logpoly] : s.terms) {
    Json t;
    Json expo = Json::array();
    for (int i = 0; i < 4; ++i) expo.push_back(Rational(key[i], 3).str());
    t["exponent"] = expo;
    Json lp = Json::array();
    for (const auto& [lmask, cls] : logpoly) {
      Json lterm;
      Json lvars = Json::array();
      static const char* names[3] = {"Lx", "Ly", "Lz"};
      for (int v = 0; v < 3; ++v)
        if (lmask & (1 << v)) lvars.push_back(names[v]);
      lterm["Lpowers"] = lvars;
      lterm["class"] = ambient_to_json(cls);
      lp.push_back(lterm);
    }
    t["logpoly"] = lp;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

Json rational_hbar(const Rational& r) { return r.str(); }
Json complex_hbar(const std::complex<double>& z) { return complex_pair(z); }

int mask_from_names(const Json& arr, const char* base) {
  int mask = 0;
  for (const auto& name : arr) {
    std::string s = name.get<std::string>();
    if (s.size() != 2 || s[0] != base[0]) throw BadArgument("bad monomial name " + s);
    if (s[1] == 'x')
      mask |= 1;
    else if (s[1] == 'y')
      mask |= 2;
    else if (s[1] == 'z')
      mask |= 4;
    else
      throw BadArgument("bad monomial name " + s);
  }
  return mask;
}

} // namespace

Json series_to_json(const ISeriesQ& s) { return series_json(s, rational_hbar); }
Json series_to_json(const ISeriesC& s) { return series_json(s, complex_hbar); }

ISeriesQ series_from_json(const Json& j) {
  ISeriesQ out;
  std::array<int, 4> expo{};
  auto exps = j.at("chamber").at("exponents");
  for (int i = 0; i < 4; ++i) expo[i] = exps[i].get<int>();
  out.chamber = ChamberChar::from_signs(expo);
  out.hbar = Rational::parse(j.at("hbar").get<std::string>());
  out.cutoff = Rational::parse(j.at("cutoff").get<std::string>());
  out.givental = j.at("givental").get<bool>();
  for (const auto& t : j.at("terms")) {
    ExponentKey key{};
    for (int i = 0; i < 4; ++i) {
      Rational r = Rational::parse(t.at("exponent")[i].get<std::string>());
      key[i] = int(r.num() * (3 / r.den()));
    }
    LogPoly<Rational> lp;
    for (const auto& lterm : t.at("logpoly")) {
      int lmask = mask_from_names(lterm.at("Lpowers"), "L");
      AmbientClass<Rational> cls;
      for (const auto& st : lterm.at("class")) {
        SectorLabel sector;
        for (int i = 0; i < 4; ++i) {
          Rational r = Rational::parse(st.at("sector")[i].get<std::string>());
          sector.thirds[i] = int(r.num() * (3 / r.den())) % 3;
        }
        NilPolyQ poly;
        for (const auto& term : st.at("terms")) {
          int mask = mask_from_names(term.at("monomial"), "H");
          Rational num = Rational::parse(term.at("coeff").at("num").get<std::string>());
          Rational den = Rational::parse(term.at("coeff").at("den").get<std::string>());
          poly[mask] = num / den;
        }
        cls.add(sector, poly);
      }
      lp[lmask] = cls;
    }
    out.terms[key] = lp;
  }
  return out;
}

Json matrix_to_json(const LgcyMatrix& m) {
  Json j;
  j["source"] = to_json(m.source);
  j["target"] = to_json(m.target);
  j["cutoff"] = m.cutoff.str();
  Json rows = Json::array();
  for (int r = 0; r < kStateDim; ++r) {
    Json row = Json::array();
    for (int c = 0; c < kStateDim; ++c) row.push_back(complex_pair(m.entries[r][c]));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

Json sectors_to_json(const ChamberChar& theta) {
  Json arr = Json::array();
  for (const auto& rec : enumerate_sectors(theta)) {
    Json r;
    r["element"] = rec.element;
    r["sector"] = to_json(rec.sector);
    r["age"] = rec.age.str();
    r["narrow"] = rec.narrow;
    r["dim"] = rec.locus_dim;
    arr.push_back(r);
  }
  return arr;
}

Json basis_to_json(const ChamberChar& theta) {
  Json arr = Json::array();
  for (const auto& slot : state_basis(theta)) {
    Json s;
    s["label"] = slot.label;
    s["sector"] = to_json(slot.sector);
    s["monomial"] = monomial_name(slot.monomial);
    s["degree"] = slot.degree;
    arr.push_back(s);
  }
  return arr;
}

Json degrees_to_json(const std::vector<Degree>& degrees) {
  Json arr = Json::array();
  for (const auto& d : degrees) {
    Json t = Json::array();
    for (int i = 0; i < 4; ++i) t.push_back(d.component(i).str());
    arr.push_back(t);
  }
  return arr;
}

} // namespace glsm
