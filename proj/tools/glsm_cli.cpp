#include <complex>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glsm/acceptance.hpp"
#include "glsm/json_io.hpp"
#include "glsm/orbi.hpp"
#include "glsm/wall_crossing.hpp"

namespace {

using glsm::Rational;
using C = std::complex<double>;

// Accepts "2", "-1.5", "i", "-i", "2+i", "1-2.5i".
C parse_complex(const std::string& s) {
  if (s.empty()) throw glsm::BadArgument("empty complex literal");
  std::string t = s;
  double re = 0.0, im = 0.0;
  auto ipos = t.find('i');
  if (ipos == std::string::npos) {
    re = std::stod(t);
    return {re, 0.0};
  }
  // split off the imaginary part: find the sign separating the two terms
  std::string imag = t.substr(0, ipos);
  size_t split = std::string::npos;
  for (size_t k = imag.size(); k-- > 1;) {
    if ((imag[k] == '+' || imag[k] == '-') && imag[k - 1] != 'e' && imag[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string repart, impart;
  if (split == std::string::npos) {
    impart = imag;
  } else {
    repart = imag.substr(0, split);
    impart = imag.substr(split);
  }
  if (impart.empty() || impart == "+")
    im = 1.0;
  else if (impart == "-")
    im = -1.0;
  else
    im = std::stod(impart);
  if (!repart.empty()) re = std::stod(repart);
  return {re, im};
}

bool is_rational_literal(const std::string& s) {
  return s.find('i') == std::string::npos && s.find('.') == std::string::npos &&
         s.find('e') == std::string::npos && s.find('E') == std::string::npos;
}

std::array<C, 4> parse_qpoint(const std::string& s) {
  std::array<C, 4> out;
  std::stringstream ss(s);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 4) throw glsm::BadArgument("eval point needs 4 entries");
    out[i++] = parse_complex(tok);
  }
  if (i != 4) throw glsm::BadArgument("eval point needs 4 entries");
  return out;
}

void print_chamber_list() {
  const char* signs = "+-";
  std::cout << "pattern  status\n";
  for (int bits = 0; bits < 16; ++bits) {
    std::string pat;
    for (int i = 0; i < 4; ++i) pat += signs[(bits >> (3 - i)) & 1];
    std::string status;
    if (pat[3] == '-') {
      status = "unsupported (a-subscript)";
    } else {
      glsm::ChamberChar theta = glsm::ChamberChar::parse(pat);
      bool canonical = false;
      for (const auto& c : glsm::canonical_chambers()) canonical = canonical || c == theta;
      // canonical representatives are the sign-sorted ones; others are their
      // xyz-permutation images
      bool sorted = pat[0] >= pat[1] && pat[1] >= pat[2];
      (void)canonical;
      status = sorted ? "supported (canonical " + theta.name() + ")"
                      : "supported (permutation image of a canonical chamber)";
    }
    std::cout << pat << "     " << status << "\n";
  }
}

void print_chamber_detail(const std::string& spec) {
  glsm::ChamberChar theta = glsm::ChamberChar::parse(spec);
  std::cout << "chamber " << theta.name() << "  exponents (" << theta.exponent(0) << ","
            << theta.exponent(1) << "," << theta.exponent(2) << "," << theta.exponent(3)
            << ")\n";
  std::cout << "json: " << glsm::to_json(theta).dump() << "\n";
  std::cout << "\nunstable components:\n";
  for (const auto& comp : glsm::unstable_components(theta))
    std::cout << "  " << comp.describe() << "\n";
  std::cout << "\ntoric divisors:\n";
  const auto& model = glsm::GlsmModel::instance();
  for (int rho = 0; rho < glsm::kNumCoords; ++rho)
    std::cout << "  D_" << std::left << std::setw(3) << model.coord_names[rho] << " = "
              << glsm::toric_divisor(rho, theta).str() << "\n";
}

void print_statespace(const std::string& spec, bool as_json) {
  glsm::ChamberChar theta = glsm::ChamberChar::parse(spec);
  if (as_json) {
    glsm::Json j;
    j["chamber"] = glsm::to_json(theta);
    j["sectors"] = glsm::sectors_to_json(theta);
    j["basis"] = glsm::basis_to_json(theta);
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "chamber " << theta.name() << "\n\n";
  std::cout << "element | sector | age | narrow | dim\n";
  for (const auto& rec : glsm::enumerate_sectors(theta))
    std::cout << rec.element << " | " << rec.sector.str() << " | " << rec.age.str() << " | "
              << (rec.narrow ? "yes" : "no") << " | " << rec.locus_dim << "\n";
  std::cout << "\nbasis (shifted degree):\n";
  std::array<int, 4> hist{0, 0, 0, 0};
  for (const auto& slot : glsm::state_basis(theta)) {
    std::cout << "  " << slot.label << "  deg " << slot.degree << "\n";
    hist[slot.degree / 2]++;
  }
  std::cout << "histogram: (" << hist[0] << "," << hist[1] << "," << hist[2] << "," << hist[3]
            << ")\n";
}

// sign and basis slot of the term at the extremal exponent
glsm::Json leading_info(const glsm::ChamberChar& theta, bool givental) {
  glsm::Json j;
  long s3 = 0;
  for (int v = 0; v < 3; ++v) s3 += glsm::extremal_degree(theta, 1).thirds[v];
  int sign = (!givental || s3 % 2 == 0) ? 1 : -1;
  glsm::SectorLabel sector =
      glsm::SectorLabel::from_degree_fracs(givental ? glsm::extremal_degree(theta, 1)
                                                    : -glsm::extremal_degree(theta, 1));
  int slot = glsm::ChamberTable::get(theta).slot_index(sector, 0);
  j["sign"] = sign;
  j["slot"] = glsm::state_basis(theta)[slot].label;
  j["degree"] = glsm::state_basis(theta)[slot].degree;
  return j;
}

int run_ifunction(const std::string& spec, const std::string& cutoff_str,
                  const std::string& hbar_str, bool givental, const std::string& eval_str) {
  glsm::ChamberChar theta = glsm::ChamberChar::parse(spec);
  Rational cutoff = Rational::parse(cutoff_str);
  if (!eval_str.empty() || !is_rational_literal(hbar_str)) {
    C hbar = parse_complex(hbar_str);
    glsm::ISeriesC series = givental ? glsm::build_givental(theta, hbar, cutoff)
                                     : glsm::build_i_series(theta, hbar, cutoff);
    glsm::Json j = glsm::series_to_json(series);
    j["leading"] = leading_info(theta, givental);
    if (!eval_str.empty()) {
      auto q = parse_qpoint(eval_str);
      glsm::StateClassC v = glsm::evaluate(series, q);
      glsm::Json ev = glsm::Json::array();
      for (int i = 0; i < glsm::kStateDim; ++i) ev.push_back(glsm::to_json(v.coeff[i]));
      j["eval"] = ev;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  Rational hbar = Rational::parse(hbar_str);
  glsm::ISeriesQ series = givental ? glsm::build_givental(theta, hbar, cutoff)
                                   : glsm::build_i_series(theta, hbar, cutoff);
  glsm::Json j = glsm::series_to_json(series);
  j["leading"] = leading_info(theta, givental);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_wallcross(const std::string& from, const std::string& to, const std::string& cutoff_str,
                  const std::string& hbar_str) {
  glsm::ChamberChar theta = glsm::ChamberChar::parse(from);
  glsm::ChamberChar target = glsm::ChamberChar::parse(to);
  Rational cutoff = Rational::parse(cutoff_str);
  C hbar = parse_complex(hbar_str);

  int moved = -1;
  for (int v = 0; v < 3; ++v)
    if (theta.exponent(v) != target.exponent(v)) {
      if (moved >= 0) throw glsm::NotAdjacent("chambers differ in more than one variable");
      moved = v;
    }
  if (moved < 0) throw glsm::NotAdjacent("chambers are identical");
  if (!theta.is_superscript(glsm::Var(moved)))
    throw glsm::BadArgument("continuation runs superscript -> subscript; swap the chambers");

  glsm::ContinuedSeries cs = glsm::continue_series(theta, glsm::Var(moved), hbar, cutoff);
  std::cout << "continuation " << theta.name() << " -> " << target.name() << " in variable "
            << "xyz"[moved] << ", " << cs.terms.size() << " terms\n\n";
  std::cout << "degree | term rel.error\n";
  for (const auto& t : cs.terms)
    std::cout << t.beta.str() << " | " << std::scientific << std::setprecision(3)
              << t.rel_error << "\n";
  std::cout << "\nmax relative error: " << std::scientific << std::setprecision(6)
            << cs.max_rel_error << "\n\n";

  glsm::LgcyMatrix m = glsm::extract_lgcy_matrix(theta, target, cutoff, hbar);
  std::cout << glsm::matrix_to_json(m).dump(2) << "\n";
  return cs.max_rel_error < 1e-9 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  // Chamber specs such as "-+-+" or "-3,3,-3,3" look like options; wrap them
  // in parentheses before option parsing (parse_chamber strips them).
  std::vector<std::string> args(argv, argv + argc);
  for (size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.empty() || a[0] != '-') continue;
    bool sign_pattern = a.size() == 4 && a.find_first_not_of("+-") == std::string::npos;
    bool tuple = a.find(',') != std::string::npos &&
                 a.find_first_not_of("+-0123456789,") == std::string::npos;
    if (sign_pattern || tuple) args[i] = "(" + a + ")";
  }
  std::vector<char*> cargv;
  for (auto& s : args) cargv.push_back(s.data());
  argc = int(cargv.size());
  argv = cargv.data();

  CLI::App app{"GIT chamber analysis, state spaces, hypergeometric I-series and "
               "wall-crossing for the fixed 13-coordinate model"};
  app.require_subcommand(1);

  std::string chamber_spec, detail_spec, cutoff = "2", hbar = "1", eval_point, from, to;
  bool givental = false, as_json = false;
  std::uint64_t seed = 20240613;

  auto* chambers = app.add_subcommand("chambers", "list the 16 sign chambers");
  chambers->add_option("--detail", detail_spec, "show unstable loci and divisors of one chamber");

  auto* statespace = app.add_subcommand("statespace", "sector table and state-space basis");
  statespace->add_option("chamber", chamber_spec, "chamber spec, e.g. ++-+ or 3,3,-3,3")
      ->required();
  statespace->add_flag("--json", as_json, "JSON output");

  auto* degrees = app.add_subcommand("degrees", "I-series summation lattice");
  degrees->add_option("chamber", chamber_spec)->required();
  degrees->add_option("--cutoff", cutoff, "max beta_theta (rational)");

  auto* ifun = app.add_subcommand("ifunction", "truncated I-series");
  ifun->add_option("chamber", chamber_spec)->required();
  ifun->add_option("--cutoff", cutoff);
  ifun->add_option("--hbar", hbar, "scalar, rational or a+bi");
  ifun->add_flag("--givental", givental, "Givental dressing (sign and log factors)");
  ifun->add_option("--eval", eval_point, "evaluate at qx,qy,qz,qa");

  auto* wallcross = app.add_subcommand("wallcross", "analytic continuation between chambers");
  wallcross->add_option("from", from)->required();
  wallcross->add_option("to", to)->required();
  wallcross->add_option("--cutoff", cutoff);
  wallcross->add_option("--hbar", hbar);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_flag("--all", "run everything (default)");
  verify->add_option("--seed", seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (chambers->parsed()) {
      if (!detail_spec.empty())
        print_chamber_detail(detail_spec);
      else
        print_chamber_list();
      return 0;
    }
    if (statespace->parsed()) {
      print_statespace(chamber_spec, as_json);
      return 0;
    }
    if (degrees->parsed()) {
      glsm::ChamberChar theta = glsm::ChamberChar::parse(chamber_spec);
      auto lattice = glsm::enumerate_ifunction_degrees(theta, Rational::parse(cutoff));
      std::cout << glsm::degrees_to_json(lattice).dump(2) << "\n";
      return 0;
    }
    if (ifun->parsed()) return run_ifunction(chamber_spec, cutoff, hbar, givental, eval_point);
    if (wallcross->parsed()) return run_wallcross(from, to, cutoff, hbar);
    if (verify->parsed()) return glsm::run_acceptance(std::cout, seed) ? 0 : 1;
  } catch (const glsm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
