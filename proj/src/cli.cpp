#include "lgmk/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lgmk/error.hpp"
#include "lgmk/fanogeom.hpp"
#include "lgmk/gammaosc.hpp"
#include "lgmk/gwabs.hpp"
#include "lgmk/lgmirror.hpp"
#include "lgmk/relmirror.hpp"
#include "lgmk/report.hpp"

namespace lgmk {

namespace {

using ojson = nlohmann::ordered_json;

struct Common {
  std::string preset;
  std::string geometry;
  int order = -1;
  std::string output;
  std::string format;
};

void add_common(CLI::App* cmd, Common& c) {
  auto* p = cmd->add_option("--preset", c.preset, "Preset geometry (" + [] {
    std::string s;
    for (const auto& n : preset_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }() + ")");
  auto* g = cmd->add_option("geometry", c.geometry, "Geometry JSON file");
  p->excludes(g);
  cmd->add_option("--order", c.order, "Anticanonical degree truncation N")->check(CLI::NonNegativeNumber);
  cmd->add_option("--output", c.output, "Write the report to this file");
}

ToricFanoPair load(const Common& c) {
  if (!c.preset.empty()) return load_preset(c.preset);
  if (!c.geometry.empty()) return load_pair_file(c.geometry);
  throw DomainError("no geometry given: use --preset NAME or a JSON path");
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw DomainError(std::string("malformed ") + what + " value '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError(std::string("empty ") + what + " list");
  return out;
}

IntVec parse_point(const std::string& text, int m) {
  IntVec p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw DomainError("malformed lattice point '" + text + "'");
    p.push_back(v);
  }
  if (static_cast<int>(p.size()) != m)
    throw DomainError("lattice point '" + text + "' needs " + std::to_string(m) + " entries");
  return p;
}

ojson int_rows(const std::vector<IntVec>& rows) {
  ojson a = ojson::array();
  for (const auto& r : rows) a.push_back(r);
  return a;
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw DomainError("cannot write " + c.output);
  f << text;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- commands

int cmd_describe(const Common& c, std::ostream& out) {
  const ToricFanoPair pair = load(c);
  ojson j;
  j["name"] = pair.name;
  j["kind"] = pair.kind == ToricFanoPair::Kind::toric ? "toric" : "smooth_divisor";
  j["n"] = pair.n;
  j["m"] = pair.m();
  j["r"] = pair.r;
  j["rays"] = int_rows(pair.rays);
  j["max_cones"] = int_rows(pair.max_cones);
  j["max_cone_count"] = pair.max_cones.size();
  j["intersection"] = int_rows(pair.intersection);
  j["anticanonical_degree"] = pair.anticanonical_degree;
  ojson basis = ojson::array();
  for (const auto& b : pair.cohomology().basis()) basis.push_back({{"name", b.name}, {"degree", b.degree}});
  j["cohomology_basis"] = basis;
  if (pair.kind == ToricFanoPair::Kind::toric) {
    const int order = std::max(c.order, 1);
    const LGPotential w = potential(pair, order);
    j["theta_expression"] = w.theta_expression;
    j["W"] = w.charts[0].to_string({}, w.chart_names[0], false);
    j["W_anticanonical"] = w.charts[0].to_string({}, w.chart_names[0]);
    j["mirror_map_trivial"] = triviality_criterion(pair, order);
  }
  emit(c, out, dump(j));
  return kExitOk;
}

int cmd_potential(const Common& c, int chart, std::ostream& out) {
  const ToricFanoPair pair = load(c);
  if (pair.kind == ToricFanoPair::Kind::smooth_divisor) {
    const ProperPotential pp = proper_potential(pair, std::max(c.order, 1));
    ojson j;
    j["pair"] = pair.name;
    j["kind"] = "proper";
    j["truncation"] = c.order;
    j["W"] = pp.potential.to_string({}, {"x"}, false);
    j["mirror_map"] = pp.mirror.to_string({"Q"}, {}, false);
    if (c.format == "text") {
      emit(c, out, pp.potential.to_string({}, {"x"}, false) + "\n");
    } else {
      emit(c, out, dump(j));
    }
    return kExitOk;
  }
  const LGPotential w = potential(pair, std::max(c.order, 1));
  if (chart < 0 || chart >= static_cast<int>(w.charts.size())) throw DomainError("chart index out of range");
  const std::string text = w.charts[chart].to_string({}, w.chart_names[chart], false);
  if (c.format == "text") {
    emit(c, out, text + "\n");
    return kExitOk;
  }
  ojson j;
  j["pair"] = pair.name;
  j["theta_expression"] = w.theta_expression;
  j["chart"] = chart;
  j["cone"] = w.cones[chart];
  j["W"] = text;
  j["W_anticanonical"] = w.charts[chart].to_string({}, w.chart_names[chart]);
  emit(c, out, dump(j));
  return kExitOk;
}

std::vector<Rational> period_by_kind(const ToricFanoPair& pair, const std::string& kind, int order) {
  if (kind == "regularized") return coefficients_by_degree(regularized_quantum_period(pair, order));
  if (kind == "quantum") return coefficients_by_degree(quantum_period(pair, order));
  if (kind == "classical") return coefficients_by_degree(classical_period(potential(pair, order).charts.at(0)));
  throw DomainError("unknown period kind '" + kind + "' (regularized, quantum, classical)");
}

int cmd_periods(const Common& c, const std::string& kind, std::ostream& out) {
  const ToricFanoPair pair = load(c);
  const auto coeffs = period_by_kind(pair, kind, c.order);
  if (c.format == "json") {
    ojson rows = ojson::array();
    for (std::size_t d = 0; d < coeffs.size(); ++d)
      if (coeffs[d] != 0) rows.push_back({{"degree", d}, {"value", to_string(coeffs[d])}});
    ojson j;
    j["pair"] = pair.name;
    j["kind"] = kind;
    j["truncation"] = c.order;
    j["coefficients"] = rows;
    emit(c, out, dump(j));
    return kExitOk;
  }
  std::ostringstream os;
  os << "degree,numerator,denominator\n";
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    if (coeffs[d] != 0) os << d << ',' << coeffs[d].get_num() << ',' << coeffs[d].get_den() << '\n';
  emit(c, out, os.str());
  return kExitOk;
}

int cmd_qde(const Common& c, const std::string& kind, int max_order, int max_degree, int held_out,
            std::ostream& out) {
  const ToricFanoPair pair = load(c);
  GradedSeries period = kind == "quantum" ? quantum_period(pair, c.order) : regularized_quantum_period(pair, c.order);
  if (kind != "quantum" && kind != "regularized") throw DomainError("unknown period kind '" + kind + "'");
  const PeriodSequence seq = period_sequence(period);
  const Recurrence rec = qde_recurrence(seq.a, max_order, max_degree, held_out);
  ojson j;
  j["pair"] = pair.name;
  j["kind"] = kind;
  j["truncation"] = c.order;
  j["variable"] = seq.step == 1 ? "t" : "t^" + std::to_string(seq.step);
  j["terms"] = seq.a.size();
  j["found"] = rec.found;
  if (rec.found) {
    j["order"] = rec.order;
    j["degree"] = rec.degree;
    j["recurrence"] = rec.to_string();
    ojson polys = ojson::array();
    for (const auto& p : rec.coeffs) {
      ojson row = ojson::array();
      for (const auto& v : p) row.push_back(v.get_str());
      polys.push_back(row);
    }
    j["coefficients"] = polys;
    j["fitted_terms"] = rec.fitted_terms;
    j["held_out"] = rec.held_out;
  }
  emit(c, out, dump(j));
  return rec.found ? kExitOk : kExitVerificationFailed;
}

int cmd_theta_product(const Common& c, const std::string& p1, const std::string& p2, std::ostream& out) {
  const ToricFanoPair pair = load(c);
  const IntVec a = parse_point(p1, pair.m());
  const IntVec b = parse_point(p2, pair.m());
  const ThetaElement prod = theta_product(pair, a, b, c.order);
  ojson terms = ojson::array();
  for (const auto& [p, s] : prod.coeffs)
    terms.push_back({{"theta", p}, {"coefficient", s.to_string({}, {}, false)}});
  ojson j;
  j["pair"] = pair.name;
  j["p1"] = a;
  j["p2"] = b;
  j["truncation"] = c.order;
  j["product"] = prod.to_string();
  j["terms"] = terms;
  emit(c, out, dump(j));
  return kExitOk;
}

struct GammaArgs {
  std::string cycle = "compact";
  std::string sheaf = "Opt";
  std::string phi = "1";
  std::string z = "1";
  std::string t = "0.1";
  int panels = 0;
  double half_width = 8.0;
  double tol = -1;
  bool two_pi_i = false;
};

int cmd_gamma_check(const Common& c, const GammaArgs& g, std::ostream& out) {
  const ToricFanoPair pair = load(c);
  const Cycle cycle = parse_cycle(g.cycle);
  const Sheaf sheaf = parse_sheaf(g.sheaf);
  const Class phi = parse_phi(pair, g.phi);
  VerifyOptions opt;
  opt.phi_label = g.phi;
  opt.quad.panels = g.panels;
  opt.quad.half_width = g.half_width;
  opt.tolerance = g.tol >= 0 ? g.tol : (cycle == Cycle::compact ? 0.0 : pair.n <= 1 ? 1e-6 : 1e-4);
  opt.normalization = g.two_pi_i ? Normalization::two_pi_i : Normalization::constant_term;
  std::vector<GammaReport> reports;
  for (double z : parse_list(g.z, "z"))
    for (double t : parse_list(g.t, "t")) reports.push_back(verify(pair, cycle, sheaf, phi, z, t, c.order, opt));
  if (c.format == "csv") {
    emit(c, out, to_csv(reports));
  } else if (reports.size() == 1) {
    emit(c, out, dump(to_json(reports[0])));
  } else {
    ojson a = ojson::array();
    for (const auto& r : reports) a.push_back(to_json(r));
    emit(c, out, dump(a));
  }
  for (const auto& r : reports)
    if (!r.passed) return kExitVerificationFailed;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Landau-Ginzburg mirrors of log Calabi-Yau pairs: periods, theta functions, Gamma checks", "lgmk"};
  app.require_subcommand(1);

  Common c;
  std::string kind = "regularized";
  int chart = 0;
  int max_order = 4, max_degree = 4, held_out = 5;
  std::string p1, p2;
  GammaArgs g;

  auto* describe = app.add_subcommand("describe", "Summarize a geometry as JSON");
  add_common(describe, c);

  auto* pot = app.add_subcommand("potential", "Landau-Ginzburg potential in a chart");
  add_common(pot, c);
  pot->add_option("--chart", chart, "Maximal cone index");
  pot->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* periods = app.add_subcommand("periods", "Period coefficients by anticanonical degree");
  add_common(periods, c);
  periods->add_option("--kind", kind, "regularized, quantum or classical");
  periods->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* qde = app.add_subcommand("qde", "Recurrence annihilating the period sequence");
  add_common(qde, c);
  qde->add_option("--kind", kind, "regularized or quantum");
  qde->add_option("--max-order", max_order, "Largest recurrence order tried");
  qde->add_option("--max-degree", max_degree, "Largest coefficient degree tried");
  qde->add_option("--held-out", held_out, "Terms reserved for validation");

  auto* theta = app.add_subcommand("theta-product", "Theta function product in the theta basis");
  add_common(theta, c);
  theta->add_option("--p1", p1, "First lattice point, comma separated")->required();
  theta->add_option("--p2", p2, "Second lattice point, comma separated")->required();

  auto* gamma = app.add_subcommand("gamma-check", "Compare both sides of the mirror Gamma identity");
  add_common(gamma, c);
  gamma->add_option("--cycle", g.cycle, "compact or real")->check(CLI::IsMember({"compact", "real"}));
  gamma->add_option("--sheaf", g.sheaf, "Opt or OX")->check(CLI::IsMember({"Opt", "OX"}));
  gamma->add_option("--phi", g.phi, "1, c1, D<i> or a cohomology basis name");
  gamma->add_option("--z", g.z, "Positive z, or a comma separated list");
  gamma->add_option("--t", g.t, "Positive t, or a comma separated list");
  gamma->add_option("--panels", g.panels, "Quadrature intervals per axis (0 = automatic)");
  gamma->add_option("--half-width", g.half_width, "Initial quadrature half width in log coordinates");
  gamma->add_option("--tol", g.tol, "Relative tolerance for a pass");
  gamma->add_flag("--two-pi-i", g.two_pi_i, "Scale both sides by (2 pi i)^n");
  gamma->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  // Per-command defaults for options shared through Common.
  auto defaults = [&c](int order, const char* format) {
    if (c.order < 0) c.order = order;
    if (c.format.empty()) c.format = format;
  };
  if (*describe) defaults(3, "json");
  if (*pot) defaults(3, "json");
  if (*periods) defaults(12, "csv");
  if (*qde) defaults(45, "json");
  if (*theta) defaults(8, "json");
  if (*gamma) defaults(10, "json");

  try {
    if (*describe) return cmd_describe(c, out);
    if (*pot) return cmd_potential(c, chart, out);
    if (*periods) return cmd_periods(c, kind, out);
    if (*qde) return cmd_qde(c, kind, max_order, max_degree, held_out, out);
    if (*theta) return cmd_theta_product(c, p1, p2, out);
    if (*gamma) return cmd_gamma_check(c, g, out);
  } catch (const GeometryError& e) {
    err << "error: geometry rejected: " << e.what() << "\n";
    return kExitInputError;
  } catch (const UnsupportedError& e) {
    err << "error: unsupported: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace lgmk
