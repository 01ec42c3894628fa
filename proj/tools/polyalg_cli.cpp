// polyalg: command-line front end. Writes one JSON document (or a CSV table)
// to stdout; exit 0 when every report passes, 1 when one fails or a
// computation breaks down, 2 on usage and label errors.
#include "output.hpp"

#include "polyalg/analytic.hpp"
#include "polyalg/applications.hpp"
#include "polyalg/coherent.hpp"
#include "polyalg/compose.hpp"
#include "polyalg/cubic.hpp"
#include "polyalg/errors.hpp"
#include "polyalg/fock.hpp"
#include "polyalg/quadratic.hpp"
#include "polyalg/survey.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace polyalg;
using polyalg::cli::json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- shared options -------------------------------------------------------

struct LabelOpts {
  std::string cls;
  std::optional<std::string> j, k, l, j1, j2, k1, k2;
  std::optional<long long> cutoff;
};

void add_label_options(CLI::App* sub, LabelOpts& o, bool with_class = true) {
  if (with_class) {
    sub->add_option("--class", o.cls,
                    "qminus2, qplus2, qminus11, qplus11 or a cubic class such as cminus_11_11")
        ->required();
  }
  sub->add_option("--j", o.j, "spin label j (p/q)");
  sub->add_option("--k", o.k, "Bargmann index k, or the cubic conserved value (p/q)");
  sub->add_option("--l", o.l, "central value l (p/q)");
  sub->add_option("--j1", o.j1, "first spin (p/q)");
  sub->add_option("--j2", o.j2, "second spin (p/q)");
  sub->add_option("--k1", o.k1, "first Bargmann index (p/q)");
  sub->add_option("--k2", o.k2, "second Bargmann index (p/q)");
  sub->add_option("--cutoff", o.cutoff, "number of states kept for an infinite rep");
}

std::optional<std::string>& label_field(LabelOpts& o, const std::string& key) {
  if (key == "j") return o.j;
  if (key == "k") return o.k;
  if (key == "l") return o.l;
  if (key == "j1") return o.j1;
  if (key == "j2") return o.j2;
  if (key == "k1") return o.k1;
  if (key == "k2") return o.k2;
  throw UsageError("unknown label key " + key);
}

const std::optional<std::string>& label_field(const LabelOpts& o, const std::string& key) {
  return label_field(const_cast<LabelOpts&>(o), key);
}

Rational need(const LabelOpts& o, const std::string& key, const std::string& cls) {
  const auto& v = label_field(o, key);
  if (!v) throw UsageError(cls + " needs --" + key);
  return parse_rational(*v);
}

// A quadratic or cubic class with its labels.
struct Target {
  bool cubic = false;
  QuadraticClass q = QuadraticClass::QMinus2;
  CubicClass c = CubicClass::CMinus11_11;
  QuadLabel ql;
  Labels labels;
  std::string name;

  LadderRep build_rep(std::optional<long long> cutoff) const {
    auto d = cubic ? dimension_cubic(c, labels) : dimension(q, ql);
    if (!d && !cutoff) throw UsageError(name + " is infinite; pass --cutoff");
    return cubic ? build_cubic(c, labels, cutoff) : build(q, ql, cutoff);
  }
  Polynomial f() const { return cubic ? structure_polynomial_cubic(c, labels) : structure_polynomial(q, ql); }
  Rational casimir() const { return cubic ? casimir_value_cubic(c, labels) : casimir_value(q, ql); }
  Realization realization() const { return cubic ? cubic_realization(c, labels) : quadratic_realization(q, ql); }
  int order() const { return cubic ? 3 : 2; }
};

Target resolve(const LabelOpts& o) {
  Target t;
  t.name = o.cls;
  try {
    t.q = parse_quadratic_class(o.cls);
  } catch (const LabelError&) {
    try {
      t.c = parse_cubic_class(o.cls);
    } catch (const LabelError&) {
      throw UsageError("unknown class '" + o.cls + "'");
    }
    t.cubic = true;
    for (const auto& key : label_keys(t.c)) t.labels[key] = need(o, key, o.cls);
    return t;
  }
  const bool spin = t.q == QuadraticClass::QMinus2 || t.q == QuadraticClass::QPlus2;
  t.ql.s = need(o, spin ? "j" : "k", o.cls);
  t.ql.l = need(o, "l", o.cls);
  validate(t.q, t.ql);
  t.labels = {{spin ? "j" : "k", t.ql.s}, {"l", t.ql.l}};
  return t;
}

json label_inputs(const LabelOpts& o) {
  json in = json::object();
  if (!o.cls.empty()) in["class"] = o.cls;
  for (const char* key : {"j", "k", "l", "j1", "j2", "k1", "k2"}) {
    const auto& v = label_field(o, key);
    if (v) in[key] = to_string(parse_rational(*v));
  }
  if (o.cutoff) in["cutoff"] = *o.cutoff;
  return in;
}

// ---- documents ------------------------------------------------------------

struct Output {
  json doc;
  std::string csv;  // non-empty: print this instead of the document
};

struct Doc {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<VerificationReport> reports;

  Output finish() const {
    json reps = json::array();
    for (const auto& r : reports) reps.push_back(cli::to_json(r));
    return {json{{"schema_version", cli::kSchemaVersion},
                 {"command", command},
                 {"inputs", inputs},
                 {"results", results},
                 {"reports", std::move(reps)}},
            {}};
  }
  bool passed() const {
    for (const auto& r : reports)
      if (!r.passed()) return false;
    return true;
  }
};

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json coefficients_json(const std::vector<Complex>& c) {
  json out = json::array();
  for (auto z : c) out.push_back(complex_json(z));
  return out;
}

// ---- rep ------------------------------------------------------------------

struct RepBuild {
  LabelOpts labels;
  bool matrices = true;
};

Doc rep_build(const RepBuild& o) {
  Target t = resolve(o.labels);
  LadderRep rep = t.build_rep(o.labels.cutoff);
  Doc d{"rep build", label_inputs(o.labels)};
  d.results = cli::rep_json(rep, o.matrices);
  d.results["class"] = t.name;
  auto dim = t.cubic ? dimension_cubic(t.c, t.labels) : dimension(t.q, t.ql);
  d.results["infinite"] = !dim.has_value();
  d.results["structure_polynomial"] = cli::to_json(t.f());
  d.results["casimir"] = to_string(t.casimir());
  return d;
}

struct RepVerify {
  LabelOpts labels;
  std::string from_file;
  double tol = 1e-10;
};

VerificationReport closure_and_casimir(const LadderRep& rep, const Polynomial& f, double tol) {
  VerificationReport r = verify_closure(rep, f, tol);
  r.add("casimir spread", casimir_spread(rep, f), tol);
  return r;
}

Doc rep_verify(const RepVerify& o) {
  Doc d{"rep verify"};
  LadderRep rep;
  Polynomial f;
  if (!o.from_file.empty()) {
    std::ifstream in(o.from_file);
    if (!in) throw UsageError("cannot open " + o.from_file);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError(o.from_file + ": " + e.what());
    }
    const json& res = doc.contains("results") ? doc.at("results") : doc;
    rep = cli::rep_from_json(res);
    if (!res.contains("structure_polynomial")) throw UsageError(o.from_file + " has no structure_polynomial");
    f = cli::polynomial_from_json(res.at("structure_polynomial"));
    d.inputs["from_file"] = o.from_file;
    if (res.contains("class")) d.results["class"] = res.at("class");
  } else {
    if (o.labels.cls.empty()) throw UsageError("rep verify needs --class or --from-file");
    Target t = resolve(o.labels);
    rep = t.build_rep(o.labels.cutoff);
    f = t.f();
    d.inputs = label_inputs(o.labels);
    d.results["class"] = t.name;
  }
  d.inputs["tol"] = o.tol;
  d.results["dim"] = rep.dim;
  d.results["interior_rows"] = rep.interior_rows();
  d.results["structure_polynomial"] = cli::to_json(f);
  d.reports.push_back(closure_and_casimir(rep, f, o.tol));
  return d;
}

// ---- oracle / casimir -----------------------------------------------------

struct WithTol {
  LabelOpts labels;
  double tol = 1e-10;
};

Doc oracle_compare(const WithTol& o) {
  Target t = resolve(o.labels);
  LadderRep rep = t.build_rep(o.labels.cutoff);
  Realization real = t.realization();
  FockSpace space = FockSpace::uniform(real.modes(), levels_for(rep, real));
  Doc d{"oracle compare", label_inputs(o.labels)};
  d.inputs["tol"] = o.tol;
  d.results = json{{"class", t.name},
                   {"dim", rep.dim},
                   {"realization", real.name},
                   {"modes", space.modes()},
                   {"levels_per_mode", space.levels().front()},
                   {"fock_dim", space.size()}};
  d.reports.push_back(oracle_check(rep, real, space, o.tol));
  return d;
}

Doc casimir_cmd(const WithTol& o) {
  Target t = resolve(o.labels);
  LadderRep rep = t.build_rep(o.labels.cutoff);
  Polynomial f = t.f();
  auto diag = casimir_on_rep(rep, f);
  Doc d{"casimir", label_inputs(o.labels)};
  d.inputs["tol"] = o.tol;
  const Rational exact = t.casimir();
  d.results = json{{"class", t.name},
                   {"casimir", to_string(exact)},
                   {"g", cli::to_json(antidifference(f))},
                   {"diagonal", diag}};
  VerificationReport r;
  r.subject = "casimir " + t.name;
  r.add("spread", casimir_spread(rep, f), o.tol);
  r.add("lowest entry vs exact", diag.empty() ? 0.0 : std::abs(diag[0] - to_double(exact)), o.tol);
  d.reports.push_back(r);
  if (!t.cubic) {
    json forms = json::array();
    for (const auto& chk : casimir_closed_forms(t.q, t.ql)) {
      forms.push_back(json{{"name", chk.name},
                           {"formula", chk.formula},
                           {"printed", to_string(chk.printed)},
                           {"literature_operator_value", to_string(chk.computed)},
                           {"normalized_value", to_string(chk.normalized)},
                           {"operator_is_casimir", chk.operator_is_casimir},
                           {"matches", chk.matches}});
    }
    d.results["closed_forms"] = std::move(forms);
    d.results["literature_casimir_h"] = cli::to_json(printed_casimir_polynomial(t.q, t.ql));
  }
  return d;
}

// ---- coherent states ------------------------------------------------------

struct CsOpts {
  LabelOpts labels;
  double re = 0.0, im = 0.0;
  double tol = 1e-10;
  long long points = 400;
};

json state_json(const CoherentState& s) {
  return json{{"parameter", complex_json(s.parameter)},
              {"coefficients", coefficients_json(s.coefficients)},
              {"norm_constant", s.norm_constant},
              {"truncation", s.truncation},
              {"tail_bound", s.tail_bound}};
}

Doc cs_bg(const CsOpts& o) {
  LabelOpts lo = o.labels;
  if (!lo.cutoff) lo.cutoff = 400;
  Target t = resolve(lo);
  LadderRep rep = t.build_rep(lo.cutoff);
  CoherentState st = bg_state(rep, {o.re, o.im}, o.tol);
  Doc d{"cs bg", label_inputs(lo)};
  d.inputs["alpha"] = json::array({o.re, o.im});
  d.inputs["tol"] = o.tol;
  d.results = state_json(st);
  VerificationReport r;
  r.subject = "bg " + t.name;
  r.add("eigen residual", bg_eigen_residual(rep, st), 10 * o.tol, "bound is 10 tol");
  d.reports.push_back(r);
  return d;
}

Doc cs_perelomov(const CsOpts& o) {
  Target t = resolve(o.labels);
  LadderRep rep = t.build_rep(o.labels.cutoff);
  CoherentState st = perelomov_state(rep, {o.re, o.im});
  Doc d{"cs perelomov", label_inputs(o.labels)};
  d.inputs["gamma"] = json::array({o.re, o.im});
  d.inputs["tol"] = o.tol;
  d.results = state_json(st);
  double n2 = 0.0;
  for (auto z : st.coefficients) n2 += std::norm(z);
  VerificationReport r;
  r.subject = "perelomov " + t.name;
  r.add("unit norm", std::abs(std::sqrt(n2) - 1.0), o.tol);
  d.reports.push_back(r);
  return d;
}

Doc cs_identity(const CsOpts& o) {
  QuadLabel lab{need(o.labels, "k", "identity-check"), need(o.labels, "l", "identity-check")};
  if (o.points < 1) throw UsageError("--points must be positive");
  IdentityCheck ic = identity_check_finite(lab, static_cast<std::size_t>(o.points), o.tol);
  Doc d{"cs identity-check", label_inputs(o.labels)};
  d.inputs["points"] = o.points;
  d.inputs["tol"] = o.tol;
  d.results = json{{"diagonal", ic.diagonal},
                   {"deviation", ic.deviation},
                   {"literature_prefactor_deviation", ic.literature_prefactor_deviation}};
  d.reports.push_back(ic.report);
  return d;
}

// ---- compose --------------------------------------------------------------

struct ComposeOpts {
  std::string left, right, pi = "0", coupling = "same";
  long long cutoff = 20;
  double tol = 1e-10;
};

struct FactorRep {
  LadderRep rep;
  int order = -1;
};

// "boson", "su2:j=3/2", "su11:k=1", "qminus11:k=1/2,l=3/4", "cplus_11_11:k1=..,k2=..,k=.."
FactorRep parse_factor(const std::string& spec, long long cutoff) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  LabelOpts lo;
  lo.cls = name;
  lo.cutoff = cutoff;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("factor label '" + item + "' is not key=value");
      std::string key = item.substr(0, eq);
      label_field(lo, key) = item.substr(eq + 1);
    }
  }
  if (name == "boson") return {to_ladder(boson_component(), cutoff), 0};
  if (name == "su2") return {to_ladder(su2_component(need(lo, "j", name))), 1};
  if (name == "su11") return {to_ladder(su11_component(need(lo, "k", name)), cutoff), 1};
  Target t = resolve(lo);
  return {t.build_rep(cutoff), t.order()};
}

Doc compose_cmd(const ComposeOpts& o) {
  FactorRep L = parse_factor(o.left, o.cutoff);
  FactorRep R = parse_factor(o.right, o.cutoff);
  Coupling cp;
  if (o.coupling == "same") cp = Coupling::Same;
  else if (o.coupling == "opposite") cp = Coupling::Opposite;
  else throw UsageError("--coupling must be same or opposite");
  Rational pi = parse_rational(o.pi);
  ComposedAlgebra comp = compose(L.rep, R.rep, pi, cp, L.order, R.order);
  PolyFit fit = fit_order(comp, o.tol);
  Doc d{"compose"};
  d.inputs = json{{"left", o.left}, {"right", o.right}, {"pi", to_string(pi)},
                  {"coupling", o.coupling}, {"cutoff", o.cutoff}, {"tol", o.tol}};
  json pairs = json::array();
  for (auto [a, b] : comp.pairs) pairs.push_back(json::array({a, b}));
  const int bound = L.order + R.order + 1;
  d.results = json{{"left_order", L.order},
                   {"right_order", R.order},
                   {"degree_bound", bound},
                   {"pairs", std::move(pairs)},
                   {"product_rep", cli::rep_json(comp.product_rep, false)},
                   {"fit", json{{"degree", fit.degree}, {"coefficients", fit.coeffs}, {"residual", fit.residual}}}};
  VerificationReport r;
  r.subject = "compose " + o.left + " x " + o.right;
  r.add("fit residual", fit.residual, o.tol);
  r.add("degree above bound", std::max(0, fit.degree - bound), 0.0);
  d.reports.push_back(r);
  return d;
}

// ---- maps -----------------------------------------------------------------

struct MapOpts {
  LabelOpts labels;
  double tol = 1e-10;
  bool top_as_boundary = false;
  int lambda = -1;
  std::optional<double> epsilon;
  bool matrix = true;
};

Doc map_conjugate(const MapOpts& o) {
  Target t = resolve(o.labels);
  LadderRep rep = t.build_rep(o.labels.cutoff);
  MapResult m = canonical_conjugate(rep, t.f(), o.tol, o.top_as_boundary);
  Doc d{"map conjugate", label_inputs(o.labels)};
  d.inputs["tol"] = o.tol;
  d.inputs["top_as_boundary"] = o.top_as_boundary;
  d.results = json{{"alpha", m.parameter}};
  if (o.matrix) d.results["conjugate"] = cli::matrix_json(m.matrix);
  d.reports.push_back(m.report);
  return d;
}

Doc map_deform(const MapOpts& o) {
  if (o.lambda != 1 && o.lambda != -1) throw UsageError("--lambda must be 1 or -1");
  Target t = resolve(o.labels);
  LadderRep rep = t.build_rep(o.labels.cutoff);
  MapResult m = deformation_map(rep, t.f(), o.lambda, o.epsilon, o.tol);
  Doc d{"map deform", label_inputs(o.labels)};
  d.inputs["lambda"] = o.lambda;
  if (o.epsilon) d.inputs["epsilon"] = *o.epsilon;
  d.inputs["tol"] = o.tol;
  d.results = json{{"epsilon", m.parameter}};
  if (o.matrix) d.results["deformed_lowering"] = cli::matrix_json(m.matrix);
  d.reports.push_back(m.report);
  return d;
}

// ---- applications ---------------------------------------------------------

struct AppOpts {
  std::optional<long long> n, n_max;
  std::string j = "1/2", l_max = "4", k = "1", k1 = "3/4", k2 = "3/4", source = "calogero";
  double omega = 1.0, kappa = 0.5, kappa_im = 0.0, w = 1.0;
  std::optional<int> photons;
  long long epsilon = 2, c_bc = 0;
  double tol = 1e-10;
};

Output app_degeneracy(const AppOpts& o, bool csv) {
  long long lo = 0, hi = 0;
  if (o.n && o.n_max) throw UsageError("pass --n or --n-max, not both");
  if (o.n) lo = hi = *o.n;
  else if (o.n_max) hi = *o.n_max;
  else throw UsageError("app degeneracy needs --n or --n-max");
  if (lo < 0 || hi < 0) throw UsageError("N must be nonnegative");
  Doc d{"app degeneracy"};
  if (o.n) d.inputs["n"] = *o.n;
  else d.inputs["n_max"] = *o.n_max;
  json rows = json::array();
  std::ostringstream table;
  table << "N,ordered,unordered,closed_form_ordered,closed_form_unordered,census,match\n";
  VerificationReport r;
  r.subject = "degeneracy";
  long long bad = 0;
  for (long long N = lo; N <= hi; ++N) {
    auto dg = aniso_degeneracy(N);
    if (!dg.matches()) ++bad;
    rows.push_back(json{{"N", N},
                        {"ordered", dg.ordered_count},
                        {"unordered", dg.unordered_count},
                        {"closed_form_ordered", dg.closed_form_ordered},
                        {"closed_form_unordered", dg.closed_form_unordered},
                        {"census", dg.census_count},
                        {"match", dg.matches()}});
    table << N << ',' << dg.ordered_count << ',' << dg.unordered_count << ','
          << dg.closed_form_ordered << ',' << dg.closed_form_unordered << ','
          << dg.census_count << ',' << (dg.matches() ? "PASS" : "FAIL") << '\n';
  }
  r.add("mismatched levels", static_cast<double>(bad), 0.0);
  d.results["levels"] = std::move(rows);
  d.reports.push_back(r);
  Output out = d.finish();
  if (csv) out.csv = table.str();
  return out;
}

std::string spectrum_csv(const BlockSpectrum& s) {
  std::ostringstream t;
  t << "block,index,algebraic,oracle,offset\n";
  for (std::size_t b = 0; b < s.block_labels.size(); ++b) {
    for (std::size_t i = 0; i < s.eigenvalues[b].size(); ++i) {
      t << s.block_labels[b] << ',' << i << ',' << format_double(s.eigenvalues[b][i]) << ','
        << (i < s.oracle_eigenvalues[b].size() ? format_double(s.oracle_eigenvalues[b][i]) : "")
        << ',' << format_double(s.offsets[b]) << '\n';
    }
  }
  return t.str();
}

json spectrum_json(const BlockSpectrum& s) {
  json blocks = json::array();
  for (std::size_t b = 0; b < s.block_labels.size(); ++b) {
    blocks.push_back(json{{"block", s.block_labels[b]},
                          {"eigenvalues", s.eigenvalues[b]},
                          {"oracle_eigenvalues", s.oracle_eigenvalues[b]},
                          {"offset", s.offsets[b]}});
  }
  return blocks;
}

Output app_dicke(const AppOpts& o, bool csv) {
  Rational j = parse_rational(o.j), l_max = parse_rational(o.l_max);
  auto s = dicke_spectrum(j, l_max, o.omega, o.kappa, o.photons, o.tol);
  Doc d{"app dicke"};
  d.inputs = json{{"j", to_string(j)}, {"l_max", to_string(l_max)}, {"omega", o.omega},
                  {"kappa", o.kappa}, {"tol", o.tol}};
  if (o.photons) d.inputs["photons"] = *o.photons;
  d.results["blocks"] = spectrum_json(s.spectrum);
  d.reports.push_back(s.report);
  Output out = d.finish();
  if (csv) out.csv = spectrum_csv(s.spectrum);
  return out;
}

Output app_trilinear(const AppOpts& o, bool csv) {
  auto s = trilinear_spectrum(o.epsilon, o.omega, {o.kappa, o.kappa_im}, o.c_bc, o.tol);
  Doc d{"app trilinear"};
  d.inputs = json{{"epsilon", o.epsilon}, {"omega_a", o.omega},
                  {"kappa", json::array({o.kappa, o.kappa_im})}, {"c_bc", o.c_bc}, {"tol", o.tol}};
  d.results["blocks"] = spectrum_json(s.spectrum);
  if (o.c_bc == 0 && o.epsilon >= 0) {
    auto a = trilinear_amplitudes(o.epsilon);
    d.results["literature_amplitudes"] = json{{"printed_raise", a.printed_raise},
                                              {"oracle_raise", a.oracle_raise},
                                              {"printed_lower", a.printed_lower},
                                              {"oracle_lower", a.oracle_lower},
                                              {"q0_offset", a.q0_offset},
                                              {"printed_matches", a.printed_matches}};
  }
  d.reports.push_back(s.report);
  Output out = d.finish();
  if (csv) out.csv = spectrum_csv(s.spectrum);
  return out;
}

Doc app_calogero(const AppOpts& o) {
  Rational j = parse_rational(o.j);
  auto c = calogero_cubic(j, o.tol);
  Doc d{"app calogero"};
  d.inputs = json{{"j", to_string(j)}, {"tol", o.tol}};
  d.results = json{{"oracle_raise", c.oracle_raise},
                   {"printed_raise", c.printed_raise},
                   {"amplitude_ratio", c.amplitude_ratio}};
  d.reports.push_back(c.report);
  return d;
}

Doc app_hahn(const AppOpts& o) {
  HahnSource src;
  Doc d{"app hahn"};
  if (o.source == "calogero") {
    src = HahnSource::calogero(parse_rational(o.j));
    d.inputs = json{{"source", o.source}, {"j", to_string(src.j)}};
  } else if (o.source == "singular") {
    src = HahnSource::singular_oscillator(parse_rational(o.k1), parse_rational(o.k2),
                                          parse_rational(o.k));
    d.inputs = json{{"source", o.source}, {"k1", to_string(src.k1)}, {"k2", to_string(src.k2)},
                    {"k", to_string(src.k)}};
  } else {
    throw UsageError("--source must be calogero or singular");
  }
  d.inputs["tol"] = o.tol;
  auto h = hahn_invariants(src, o.tol);
  d.results = json{{"g", h.g},
                   {"literature_bracket", h.printed_formula},
                   {"literature_bracket_residual", h.printed_residual}};
  d.reports.push_back(h.report);
  return d;
}

Doc app_qes(const AppOpts& o) {
  Rational k = parse_rational(o.k), k1 = parse_rational(o.k1);
  auto q = qes_potential(k, k1, o.w);
  Doc d{"app qes"};
  d.inputs = json{{"k", to_string(k)}, {"k1", to_string(k1)}, {"w", o.w}};
  d.results = json{{"potential", json{{"constant", q.c0}, {"x2", q.c2}, {"x-2", to_string(q.cm2)}}},
                   {"gauge", json{{"x", q.a1}, {"x-1", to_string(q.am1)}}}};
  return d;
}

Doc ledger_cmd() {
  Doc d{"ledger"};
  json entries = json::array();
  for (const auto& e : discrepancy_ledger()) {
    entries.push_back(json{{"id", e.id},
                           {"topic", e.topic},
                           {"printed", e.printed},
                           {"computed", e.computed},
                           {"resolution", e.resolution}});
  }
  d.results["entries"] = std::move(entries);
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyalg: polynomial deformations of su(2) and su(1,1)"};
  app.set_config("--config", "", "key = value file; options of a subcommand go under [rep.build] etc.");
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "json or csv (csv: degeneracy, dicke, trilinear)")
      ->check(CLI::IsMember({"json", "csv"}));

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };

  RepBuild rb;
  RepVerify rv;
  WithTol oc, cz;
  CsOpts bg, pe, ic;
  ComposeOpts co;
  MapOpts mc, md;
  AppOpts ap;
  bool no_matrices = false;

  CLI::App* rep = group("rep", "build and verify ladder representations");
  CLI::App* rep_b = leaf(rep, "build", "build a representation");
  add_label_options(rep_b, rb.labels);
  rep_b->add_flag("--no-matrices", no_matrices, "omit the N0, N+, N- matrices");
  CLI::App* rep_v = leaf(rep, "verify", "check closure and Casimir constancy");
  add_label_options(rep_v, rv.labels, false);
  rep_v->add_option("--class", rv.labels.cls, "representation class");
  rep_v->add_option("--from-file", rv.from_file, "a `rep build` JSON document");
  rep_v->add_option("--tol", rv.tol, "tolerance");

  CLI::App* oracle = group("oracle", "boson oracles");
  CLI::App* oracle_c = leaf(oracle, "compare", "compare a rep with its Fock-space realization");
  add_label_options(oracle_c, oc.labels);
  oracle_c->add_option("--tol", oc.tol, "tolerance");

  CLI::App* cas = leaf(&app, "casimir", "Casimir diagonal and closed forms");
  add_label_options(cas, cz.labels);
  cas->add_option("--tol", cz.tol, "tolerance");

  CLI::App* cs = group("cs", "coherent states");
  CLI::App* cs_b = leaf(cs, "bg", "Barut-Girardello state");
  add_label_options(cs_b, bg.labels);
  cs_b->add_option("--alpha-re", bg.re, "Re alpha");
  cs_b->add_option("--alpha-im", bg.im, "Im alpha");
  cs_b->add_option("--tol", bg.tol, "truncation tolerance");
  CLI::App* cs_p = leaf(cs, "perelomov", "Perelomov state");
  add_label_options(cs_p, pe.labels);
  cs_p->add_option("--gamma-re", pe.re, "Re gamma");
  cs_p->add_option("--gamma-im", pe.im, "Im gamma");
  cs_p->add_option("--tol", pe.tol, "tolerance on the norm");
  CLI::App* cs_i = leaf(cs, "identity-check", "resolution of the identity on finite Q-(1,1) reps");
  add_label_options(cs_i, ic.labels, false);
  cs_i->add_option("--points", ic.points, "quadrature points");
  cs_i->add_option("--tol", ic.tol, "tolerance");

  CLI::App* comp = leaf(&app, "compose", "product of two ladder algebras");
  comp->add_option("--left", co.left, "left factor, e.g. su2:j=3/2")->required();
  comp->add_option("--right", co.right, "right factor, e.g. boson")->required();
  comp->add_option("--pi", co.pi, "conserved value (p/q)");
  comp->add_option("--coupling", co.coupling, "same or opposite");
  comp->add_option("--cutoff", co.cutoff, "states kept for infinite factors");
  comp->add_option("--tol", co.tol, "fit tolerance");

  CLI::App* map = group("map", "maps onto Heisenberg, su(2), su(1,1)");
  CLI::App* map_c = leaf(map, "conjugate", "canonical conjugate of the lowering generator");
  add_label_options(map_c, mc.labels);
  map_c->add_option("--tol", mc.tol, "tolerance");
  map_c->add_flag("--top-as-boundary", mc.top_as_boundary, "skip the pole on a finite rep's top state");
  map_c->add_flag("!--no-matrix", mc.matrix, "omit the matrix");
  CLI::App* map_d = leaf(map, "deform", "deformation onto su(2) (lambda=1) or su(1,1) (lambda=-1)");
  add_label_options(map_d, md.labels);
  map_d->add_option("--lambda", md.lambda, "1 or -1");
  map_d->add_option("--epsilon", md.epsilon, "override the vacuum constant");
  map_d->add_option("--tol", md.tol, "tolerance");
  map_d->add_flag("!--no-matrix", md.matrix, "omit the matrix");

  CLI::App* apps = group("app", "physical applications");
  CLI::App* a_deg = leaf(apps, "degeneracy", "levels of n1 + n2 + 2 n3");
  a_deg->add_option("--n", ap.n, "one level");
  a_deg->add_option("--n-max", ap.n_max, "all levels 0..n-max");
  CLI::App* a_dk = leaf(apps, "dicke", "Dicke blocks against the dense oracle");
  a_dk->add_option("--j", ap.j, "spin j (p/q)");
  a_dk->add_option("--l-max", ap.l_max, "largest block label (p/q)");
  a_dk->add_option("--omega", ap.omega, "frequency");
  a_dk->add_option("--kappa", ap.kappa, "coupling");
  a_dk->add_option("--photons", ap.photons, "photon levels in the oracle");
  a_dk->add_option("--tol", ap.tol, "tolerance");
  CLI::App* a_tr = leaf(apps, "trilinear", "three-boson Hamiltonian");
  a_tr->add_option("--epsilon", ap.epsilon, "n_a + n_b");
  a_tr->add_option("--omega-a", ap.omega, "mode a frequency");
  a_tr->add_option("--kappa-re", ap.kappa, "Re kappa");
  a_tr->add_option("--kappa-im", ap.kappa_im, "Im kappa");
  a_tr->add_option("--c-bc", ap.c_bc, "n_b - n_c");
  a_tr->add_option("--tol", ap.tol, "tolerance");
  CLI::App* a_ca = leaf(apps, "calogero", "cubic algebra on the even su(2) ladder");
  a_ca->add_option("--j", ap.j, "spin j (p/q)");
  a_ca->add_option("--tol", ap.tol, "tolerance");
  CLI::App* a_ha = leaf(apps, "hahn", "Hahn algebra invariants");
  a_ha->add_option("--source", ap.source, "calogero or singular");
  a_ha->add_option("--j", ap.j, "spin j for calogero");
  a_ha->add_option("--k1", ap.k1, "singular oscillator k1");
  a_ha->add_option("--k2", ap.k2, "singular oscillator k2");
  a_ha->add_option("--k", ap.k, "singular oscillator k");
  a_ha->add_option("--tol", ap.tol, "tolerance");
  CLI::App* a_qe = leaf(apps, "qes", "quasi-exactly solvable potential");
  a_qe->add_option("--k", ap.k, "k (p/q)");
  a_qe->add_option("--k1", ap.k1, "k1 (p/q)");
  a_qe->add_option("--w", ap.w, "w");

  CLI::App* led = leaf(&app, "ledger", "places where literature formulas disagree with the library");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool csv = format == "csv";
  try {
    Output out;
    bool passed = true;
    auto take = [&](const Doc& d) {
      passed = d.passed();
      out = d.finish();
    };
    auto take_out = [&](Output o) {
      passed = true;
      for (const auto& r : o.doc["reports"]) passed = passed && r["passed"].get<bool>();
      out = std::move(o);
    };
    const bool csv_ok = a_deg->parsed() || a_dk->parsed() || a_tr->parsed();
    if (csv && !csv_ok) throw UsageError("--format csv is only available for app degeneracy, dicke, trilinear");

    rb.matrices = !no_matrices;
    if (rep_b->parsed()) take(rep_build(rb));
    else if (rep_v->parsed()) take(rep_verify(rv));
    else if (oracle_c->parsed()) take(oracle_compare(oc));
    else if (cas->parsed()) take(casimir_cmd(cz));
    else if (cs_b->parsed()) take(cs_bg(bg));
    else if (cs_p->parsed()) take(cs_perelomov(pe));
    else if (cs_i->parsed()) take(cs_identity(ic));
    else if (comp->parsed()) take(compose_cmd(co));
    else if (map_c->parsed()) take(map_conjugate(mc));
    else if (map_d->parsed()) take(map_deform(md));
    else if (a_deg->parsed()) take_out(app_degeneracy(ap, csv));
    else if (a_dk->parsed()) take_out(app_dicke(ap, csv));
    else if (a_tr->parsed()) take_out(app_trilinear(ap, csv));
    else if (a_ca->parsed()) take(app_calogero(ap));
    else if (a_ha->parsed()) take(app_hahn(ap));
    else if (a_qe->parsed()) take(app_qes(ap));
    else if (led->parsed()) take(ledger_cmd());

    if (!out.csv.empty()) std::cout << out.csv;
    else std::cout << out.doc.dump(2) << '\n';
    if (!passed) std::cerr << "polyalg: a verification report failed\n";
    return passed ? 0 : 1;
  } catch (const PoleError& e) {
    std::cerr << "polyalg: " << e.what() << '\n';
    return 1;
  } catch (const ConvergenceError& e) {
    std::cerr << "polyalg: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {  // LabelError, ShapeError, usage
    std::cerr << "polyalg: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "polyalg: " << e.what() << '\n';
    return 1;
  }
}
