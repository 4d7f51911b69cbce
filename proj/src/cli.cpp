#include "igusa/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <set>

#include "igusa/errors.hpp"
#include "igusa/json_io.hpp"
#include "igusa/weil_bounds.hpp"

namespace igusa {

namespace {

struct Options {
  std::string poly;
  std::string model;
  std::string points;
  std::string form;
  std::string model_a;
  std::string model_b;
  std::string data;
  std::string tau;
  std::string s = "2";
  std::string format = "json";
  std::string method = "hensel";
  long p = 0;
  int f = 1;
  int kmax = 6;
  long r = 1;
  int r_d = 1;
  double guard = kDefaultGuard;
  unsigned threads = 0;
  std::vector<long> betti;
  int dim = 1;
  bool prime_power = false;
  int depth = 1;
};

struct Output {
  Json json;
  std::string latex;  // set by commands with a rational-function result
};

Json integers_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string jacobian_text(const RecoveredJacobian& j) {
  if (!j.j) return "0";
  if (*j.j == 0) return "1";
  return "q^-" + std::to_string(*j.j);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

PolynomialFile load_poly(const Options& o) {
  require(!o.poly.empty(), "--poly is required");
  return load_polynomial(o.poly);
}

CountProfile counts_for(const Options& o, const IntPolynomial& f) {
  require(o.p >= 2, "--p is required");
  require(o.kmax >= 1, "--kmax must be >= 1");
  if (o.method == "hensel") return count_zeros_hensel(f, o.p, o.kmax, Domain::full);
  CountProfile prof;
  prof.p = o.p;
  prof.k_max = o.kmax;
  prof.domain = Domain::full;
  const CountOptions opts{o.guard, o.threads};
  for (int k = 1; k <= o.kmax; ++k) prof.counts.push_back(count_zeros_naive(f, o.p, k, Domain::full, opts));
  return prof;
}

// The SNC model from --model, or the one shipped with the polynomial for --p.
GlobalModel model_for(const Options& o, const PolynomialFile* poly) {
  if (!o.model.empty()) return load_global_model(o.model);
  require(poly != nullptr, "--model is required");
  auto it = poly->models.find(o.p);
  if (it == poly->models.end()) {
    throw SchemaError("no SNC model shipped for p = " + std::to_string(o.p) + "; pass --model");
  }
  return load_global_model(it->second);
}

Output zeta_series(const Options& o) {
  Output out;
  if (!o.points.empty()) {
    const GlobalPointModel m = load_point_model(o.points);
    require(o.kmax >= 1, "--kmax must be >= 1");
    const auto counts = global_counts(m, o.kmax);
    const NormLimits lim = norm_limits(m);
    out.json = {{"residueCount", m.residue_count()},
                {"n", m.n},
                {"p", m.params.p()},
                {"kmax", o.kmax},
                {"counts", integers_json(counts)},
                {"series", to_json(global_norm_series(m, counts))},
                {"normAtZero", rational_json(lim.at_zero)},
                {"normAtInfinity", rational_json(lim.at_infinity)}};
    return out;
  }
  const PolynomialFile pf = load_poly(o);
  const CountProfile prof = counts_for(o, pf.poly);
  out.json = {{"label", pf.label},
              {"p", o.p},
              {"kmax", o.kmax},
              {"method", o.method},
              {"counts", integers_json(prof.counts)},
              {"series", to_json(local_zeta_series(prof, pf.poly.nvars()))}};
  if (o.method == "hensel") out.json["treeWidth"] = prof.tree_width;
  return out;
}

Output zeta_rational(const Options& o) {
  PolynomialFile pf;
  const bool have_poly = !o.poly.empty();
  if (have_poly) pf = load_poly(o);
  const GlobalModel m = model_for(o, have_poly ? &pf : nullptr);
  const ZetaRational z = assemble_zeta(m, o.form);
  Output out;
  out.latex = z.to_latex();
  out.json = {{"q", m.params.q()}, {"zeta", to_json(z)}};
  if (!o.form.empty()) out.json["form"] = o.form;
  if (!o.tau.empty()) out.json["value"] = rational_json(z.evaluate(parse_rational(o.tau)));
  return out;
}

Output zeta_check(const Options& o) {
  const PolynomialFile pf = load_poly(o);
  const GlobalModel m = model_for(o, &pf);
  require(m.params.q() == o.p, "model residue field does not match --p");
  require(m.n == pf.poly.nvars(), "model dimension does not match the polynomial");
  const ZetaRational z = assemble_zeta(m, o.form);
  const CountProfile prof = counts_for(o, pf.poly);
  const TruncatedSeries counted = local_zeta_series(prof, pf.poly.nvars());
  const int order = o.kmax - 1;
  const TruncatedSeries expanded = rf_taylor(z, order);
  const bool match = series_match(counted, expanded, order);
  Output out;
  out.latex = z.to_latex();
  out.json = {{"label", pf.label},
              {"p", o.p},
              {"kmax", o.kmax},
              {"method", o.method},
              {"match", match},
              {"order", order},
              {"counts", integers_json(prof.counts)},
              {"series", to_json(counted)},
              {"rationalSeries", to_json(expanded)},
              {"zeta", to_json(z)}};
  return out;
}

Output threshold(const Options& o) {
  require(!o.model.empty(), "--model is required");
  const GlobalModel m = load_global_model(o.model);
  const KltReport klt = klt_check(m.divisors);
  Output out;
  out.json = {{"klt", klt.klt}, {"violators", klt.violators}, {"r", m.r}};
  const Threshold t = threshold_s_r(m.divisors, m.r);
  out.json["threshold"] = t.infinite ? Json("inf") : rational_json(t.value);
  return out;
}

Output q0(const Options& o) {
  BettiProfile prof{o.dim, o.betti};
  try {
    prof.validate();
  } catch (const SchemaError& e) {
    throw DomainError(e.what());
  }
  const Q0Report rep = q0_report(prof);
  Output out;
  out.json = {{"q0", rep.q0}, {"verifiedWindow", {rep.q0, rep.window_end}}};
  if (rep.curve_closed_form) {
    out.json["curveClosedForm"] = *rep.curve_closed_form;
    out.json["closedFormDiscrepancy"] = rep.closed_form_discrepancy;
  }
  if (o.prime_power) out.json["primePowerQ0"] = next_prime_power(rep.q0);
  return out;
}

NormExponent exponent(const Options& o) { return {o.r, parse_rational(o.s)}; }

Json jacobian_json(const std::vector<RecoveredJacobian>& js) {
  Json j = Json::object();
  for (const auto& x : js) j[x.label] = jacobian_text(x);
  return j;
}

// [mE, m] per divisor family from the recovered exponents; mE = 0 when undetermined.
Json multiplicities_json(const CellMeasureModel& m, const std::vector<RecoveredJacobian>& js) {
  std::map<std::string, std::vector<long>> families;
  for (std::size_t i = 0; i < m.cells.size(); ++i) {
    if (m.cells[i].family && js[i].j) families[*m.cells[i].family].push_back(*js[i].j);
  }
  Json out = Json::object();
  for (const auto& [name, values] : families) {
    const Multiplicity mult = recover_multiplicity(values);
    out[name] = {mult.m_e, mult.m};
  }
  return out;
}

Output jacobian_recover(const Options& o) {
  require(!o.model.empty(), "--model is required");
  const CellMeasureModel m = load_cell_measure_model(o.model);
  const auto js = recover_jacobian(m, exponent(o));
  Output out;
  out.json = {{"jacobian", jacobian_json(js)}, {"multiplicities", multiplicities_json(m, js)}};
  return out;
}

Output kequiv_compare(const Options& o) {
  require(!o.model_a.empty() && !o.model_b.empty(), "--model-a and --model-b are required");
  const CellMeasureModel a = load_cell_measure_model(o.model_a);
  const CellMeasureModel b = load_cell_measure_model(o.model_b);
  const NormExponent e = exponent(o);
  const bool iso = isometry_check(build_dataset(a, e, o.depth, o.threads), build_dataset(b, e, o.depth, o.threads));
  const auto ja = recover_jacobian(a, e);
  const auto jb = recover_jacobian(b, e);

  // J_A / J_B per cell, matched by label.
  std::map<std::string, const RecoveredJacobian*> by_label;
  for (const auto& x : jb) by_label[x.label] = &x;
  std::set<long> shifts;
  bool comparable = ja.size() == jb.size();
  for (const auto& x : ja) {
    auto it = by_label.find(x.label);
    if (it == by_label.end()) {
      comparable = false;
      break;
    }
    if (x.j && it->second->j) shifts.insert(*it->second->j - *x.j);
    else if (x.j.has_value() != it->second->j.has_value()) comparable = false;
  }
  Output out;
  out.json = {{"isometry", iso},
              {"jacobian", {{"a", jacobian_json(ja)}, {"b", jacobian_json(jb)}}},
              {"multiplicities", multiplicities_json(a, ja)}};
  const bool proportional = comparable && shifts.size() <= 1;
  out.json["proportional"] = proportional;
  out.json["jacobianRatio"] =
      proportional ? Json("q^" + std::to_string(shifts.empty() ? 0 : *shifts.begin())) : Json(nullptr);
  return out;
}

Output norms_reconstruct(const Options& o) {
  require(!o.data.empty(), "--data is required");
  const TwoNormData d = load_two_norm_data(o.data);
  const auto cells = recover_exponents(d.cells, d.s1, d.s2, d.q);
  const ZetaRational z = total_norm_function(cells);
  Output out;
  Json exps = Json::object();
  Json masses = Json::object();
  for (const auto& c : cells) {
    exps[c.label] = c.a;
    masses[c.label] = rational_json(c.mu);
  }
  out.latex = z.to_latex();
  out.json = {{"exponents", exps}, {"masses", masses}, {"norm", to_json(z)}};
  if (!o.tau.empty()) out.json["value"] = rational_json(z.evaluate(parse_rational(o.tau)));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Igusa zeta functions and norm geometry", "igusa"};
  app.require_subcommand(1);
  Options o;
  std::function<Output(const Options&)> command;

  auto counting_flags = [&](CLI::App* c) {
    c->add_option("--p", o.p, "residue characteristic");
    c->add_option("--f", o.f, "residue degree")->check(CLI::Range(1, 1));
    c->add_option("--kmax", o.kmax, "highest level k");
    c->add_option("--guard", o.guard, "naive enumeration budget")->check(CLI::PositiveNumber);
    c->add_option("--threads", o.threads, "worker threads (0: all cores)");
    c->add_option("--method", o.method, "hensel or naive")->check(CLI::IsMember({"hensel", "naive"}));
  };
  auto format_flag = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json, latex or both")->check(CLI::IsMember({"json", "latex", "both"}));
  };
  auto exponent_flags = [&](CLI::App* c) {
    c->add_option("--s", o.s, "exponent s as a/b");
    c->add_option("--r", o.r, "pluricanonical degree r");
    c->add_option("--rD", o.r_d, "variable scale");
  };

  CLI::App* zeta = app.add_subcommand("zeta", "local and global zeta functions");
  zeta->require_subcommand(1);
  CLI::App* series = zeta->add_subcommand("series", "series from point counts");
  series->add_option("--poly", o.poly, "polynomial JSON");
  series->add_option("--points", o.points, "global point model JSON");
  counting_flags(series);
  format_flag(series);
  series->callback([&] { command = zeta_series; });

  CLI::App* rational = zeta->add_subcommand("rational", "closed form from an SNC model");
  rational->add_option("--poly", o.poly, "polynomial JSON (selects its shipped model)");
  rational->add_option("--model", o.model, "SNC model JSON");
  rational->add_option("--form", o.form, "form name in the model");
  rational->add_option("--p", o.p, "prime selecting the shipped model");
  rational->add_option("--tau", o.tau, "evaluate at tau = a/b");
  format_flag(rational);
  rational->callback([&] { command = zeta_rational; });

  CLI::App* check = zeta->add_subcommand("check", "compare both paths");
  check->add_option("--poly", o.poly, "polynomial JSON")->required();
  check->add_option("--model", o.model, "SNC model JSON (default: shipped)");
  check->add_option("--form", o.form, "form name in the model");
  counting_flags(check);
  format_flag(check);
  check->callback([&] { command = zeta_check; });

  CLI::App* thr = app.add_subcommand("threshold", "klt check and s_r");
  thr->add_option("--model", o.model, "SNC model JSON")->required();
  format_flag(thr);
  thr->callback([&] { command = threshold; });

  CLI::App* q0cmd = app.add_subcommand("q0", "Weil bound threshold from Betti numbers");
  q0cmd->add_option("--betti", o.betti, "h^1 .. h^(2n-1)")->required();
  q0cmd->add_option("--dim", o.dim, "dimension n");
  q0cmd->add_flag("--prime-power", o.prime_power, "also report the next prime power");
  format_flag(q0cmd);
  q0cmd->callback([&] { command = q0; });

  CLI::App* kequiv = app.add_subcommand("kequiv", "K-equivalence tests");
  kequiv->require_subcommand(1);
  CLI::App* compare = kequiv->add_subcommand("compare", "isometry and Jacobian profiles of two models");
  compare->add_option("--model-a", o.model_a, "cell-measure JSON")->required();
  compare->add_option("--model-b", o.model_b, "cell-measure JSON")->required();
  compare->add_option("--depth", o.depth, "lambda grid depth");
  compare->add_option("--threads", o.threads, "worker threads (0: all cores)");
  exponent_flags(compare);
  format_flag(compare);
  compare->callback([&] { command = kequiv_compare; });

  CLI::App* jac = app.add_subcommand("jacobian", "Jacobian recovery");
  jac->require_subcommand(1);
  CLI::App* recover = jac->add_subcommand("recover", "recover J per cell");
  recover->add_option("--model", o.model, "cell-measure JSON")->required();
  exponent_flags(recover);
  format_flag(recover);
  recover->callback([&] { command = jacobian_recover; });

  CLI::App* norms = app.add_subcommand("norms", "norm reconstruction");
  norms->require_subcommand(1);
  CLI::App* recon = norms->add_subcommand("reconstruct", "total norm from two norms");
  recon->add_option("--data", o.data, "two-norm JSON")->required();
  recon->add_option("--tau", o.tau, "evaluate at tau = a/b");
  format_flag(recon);
  recon->callback([&] { command = norms_reconstruct; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  try {
    const Output result = command(o);
    if (o.format == "latex") {
      if (result.latex.empty()) throw DomainError("this command has no LaTeX output");
      out << result.latex << "\n";
    } else {
      Json j = result.json;
      if (o.format == "both" && !result.latex.empty()) j["latex"] = result.latex;
      out << j.dump(2) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::internal);
  }
}

}  // namespace igusa
