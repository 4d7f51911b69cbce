#include "igusa/json_io.hpp"

#include <fstream>
#include <set>

#include "igusa/errors.hpp"

namespace igusa {

namespace {

// Checked access to one JSON object: unknown keys are rejected up front.
class Fields {
 public:
  Fields(const Json& j, std::string where, std::initializer_list<const char*> allowed) : j_(j), where_(std::move(where)) {
    if (!j.is_object()) throw SchemaError(where_ + ": expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items()) {
      if (!ok.count(key)) throw SchemaError(where_ + ": unknown field '" + key + "'");
    }
  }

  bool has(const char* key) const { return j_.contains(key) && !j_.at(key).is_null(); }

  const Json& at(const char* key) const {
    if (!j_.contains(key)) throw SchemaError(where_ + ": missing field '" + key + "'");
    return j_.at(key);
  }

  long integer(const char* key) const { return as_integer(at(key), field(key)); }
  long integer_or(const char* key, long fallback) const { return has(key) ? integer(key) : fallback; }
  Rational rational(const char* key) const { return as_rational(at(key), field(key)); }
  Rational rational_or(const char* key, const Rational& fallback) const {
    return has(key) ? rational(key) : fallback;
  }
  std::string string(const char* key) const {
    const Json& v = at(key);
    if (!v.is_string()) throw SchemaError(field(key) + ": expected a string");
    return v.get<std::string>();
  }
  const Json& array(const char* key) const {
    const Json& v = at(key);
    if (!v.is_array()) throw SchemaError(field(key) + ": expected an array");
    return v;
  }
  std::string field(const char* key) const { return where_ + "." + key; }

  static long as_integer(const Json& v, const std::string& where) {
    if (!v.is_number_integer()) throw SchemaError(where + ": expected an integer");
    return v.get<long>();
  }
  static Rational as_rational(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
      try {
        return parse_rational(v.get<std::string>());
      } catch (const SchemaError& e) {
        throw SchemaError(where + ": " + e.what());
      }
    }
    throw SchemaError(where + ": expected an integer or a rational string");
  }

 private:
  const Json& j_;
  std::string where_;
};

void check_version(const Fields& f) {
  if (f.integer("schemaVersion") != kSchemaVersion) {
    throw SchemaError("unsupported schemaVersion (expected " + std::to_string(kSchemaVersion) + ")");
  }
}

std::vector<Term> parse_terms(const Json& arr, int n, const std::string& where) {
  if (!arr.is_array()) throw SchemaError(where + ": expected an array of terms");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    const Json& t = arr[i];
    if (!t.is_array() || t.size() != 2 || !t[1].is_array()) throw SchemaError(w + ": expected [coeff, [exponents]]");
    Term term;
    term.coeff = Fields::as_integer(t[0], w);
    if (static_cast<int>(t[1].size()) != n) throw SchemaError(w + ": expected " + std::to_string(n) + " exponents");
    for (const auto& e : t[1]) {
      const long v = Fields::as_integer(e, w);
      if (v < 0) throw SchemaError(w + ": negative exponent");
      term.exps.push_back(static_cast<int>(v));
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

int positive_dimension(long n, const std::string& where) {
  if (n < 1 || n > 16) throw SchemaError(where + ": dimension must be in [1, 16]");
  return static_cast<int>(n);
}

ResidueParams make_params(long p, long f) {
  try {
    return ResidueParams(p, static_cast<int>(f));
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

PolynomialFile parse_polynomial(const Json& j, const std::filesystem::path& base_dir) {
  Fields f(j, "polynomial", {"schemaVersion", "label", "n", "terms", "models"});
  check_version(f);
  PolynomialFile out;
  const int n = positive_dimension(f.integer("n"), f.field("n"));
  out.poly = IntPolynomial(n, parse_terms(f.at("terms"), n, f.field("terms")));
  if (f.has("label")) out.label = f.string("label");
  if (f.has("models")) {
    const Json& m = f.at("models");
    if (!m.is_object()) throw SchemaError("polynomial.models: expected an object");
    for (const auto& [key, value] : m.items()) {
      long p = 0;
      try {
        std::size_t used = 0;
        p = std::stol(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw SchemaError("polynomial.models: key '" + key + "' is not a prime");
      }
      if (!value.is_string()) throw SchemaError("polynomial.models." + key + ": expected a path");
      out.models[p] = base_dir / value.get<std::string>();
    }
  }
  return out;
}

PolynomialFile load_polynomial(const std::filesystem::path& path) {
  return parse_polynomial(read_json_file(path), path.parent_path());
}

GlobalModel parse_global_model(const Json& j) {
  Fields f(j, "model", {"schemaVersion", "n", "r", "rD", "p", "f", "divisors", "cells", "forms"});
  check_version(f);
  GlobalModel m;
  m.n = positive_dimension(f.integer("n"), f.field("n"));
  m.r = f.integer_or("r", 1);
  m.r_d = static_cast<int>(f.integer_or("rD", 1));
  m.params = make_params(f.integer("p"), f.integer_or("f", 1));

  const Json& divs = f.array("divisors");
  for (std::size_t i = 0; i < divs.size(); ++i) {
    Fields d(divs[i], "divisors[" + std::to_string(i) + "]", {"label", "aE", "mE", "dE", "lE", "fE"});
    DivisorData e;
    e.label = d.string("label");
    e.a = d.integer("aE");
    e.m = d.integer("mE");
    e.d = d.rational_or("dE", 0);
    e.l = d.rational_or("lE", 0);
    e.f = d.integer_or("fE", 0);
    m.divisors.push_back(std::move(e));
  }

  const Json& cells = f.array("cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string where = "cells[" + std::to_string(i) + "]";
    Fields c(cells[i], where, {"k", "axes", "unitValA", "unitValM", "copies"});
    ModelCell cell;
    cell.depth = static_cast<int>(c.integer("k"));
    cell.unit_val_a = c.integer_or("unitValA", 0);
    cell.unit_val_m = c.integer_or("unitValM", 0);
    cell.copies = c.integer_or("copies", 1);
    const Json& axes = c.array("axes");
    for (std::size_t a = 0; a < axes.size(); ++a) {
      Fields ax(axes[a], where + ".axes[" + std::to_string(a) + "]", {"divisor", "unit"});
      ModelAxis axis;
      if (ax.has("divisor") == ax.has("unit")) {
        throw SchemaError(where + ".axes[" + std::to_string(a) + "]: give exactly one of divisor, unit");
      }
      if (ax.has("divisor")) {
        axis.divisor = ax.string("divisor");
      } else if (!ax.at("unit").is_boolean() || !ax.at("unit").get<bool>()) {
        throw SchemaError(where + ".axes[" + std::to_string(a) + "].unit: expected true");
      }
      cell.axes.push_back(axis);
    }
    m.cells.push_back(std::move(cell));
  }

  if (f.has("forms")) {
    const Json& forms = f.at("forms");
    if (!forms.is_object()) throw SchemaError("model.forms: expected an object");
    for (const auto& [name, body] : forms.items()) {
      const std::string where = "forms." + name;
      Fields ff(body, where, {"divisorOrders", "cellUnitValA"});
      FormOnModel form;
      if (ff.has("divisorOrders")) {
        const Json& d = ff.at("divisorOrders");
        if (!d.is_object()) throw SchemaError(where + ".divisorOrders: expected an object");
        for (const auto& [label, v] : d.items()) form.divisor_orders[label] = Fields::as_integer(v, where + "." + label);
      }
      if (ff.has("cellUnitValA")) {
        const Json& d = ff.at("cellUnitValA");
        if (!d.is_object()) throw SchemaError(where + ".cellUnitValA: expected an object");
        for (const auto& [idx, v] : d.items()) {
          std::size_t cell = 0;
          try {
            cell = std::stoul(idx);
          } catch (const std::exception&) {
            throw SchemaError(where + ".cellUnitValA: key '" + idx + "' is not a cell index");
          }
          form.unit_val_a[cell] = Fields::as_integer(v, where + "." + idx);
        }
      }
      m.forms[name] = std::move(form);
    }
  }
  m.validate();
  return m;
}

GlobalModel load_global_model(const std::filesystem::path& path) { return parse_global_model(read_json_file(path)); }

Json to_json(const GlobalModel& model) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["n"] = model.n;
  j["r"] = model.r;
  j["rD"] = model.r_d;
  j["p"] = model.params.p();
  j["f"] = model.params.f();
  j["divisors"] = Json::array();
  for (const auto& e : model.divisors) {
    j["divisors"].push_back({{"label", e.label},
                             {"aE", e.a},
                             {"mE", e.m},
                             {"dE", rational_json(e.d)},
                             {"lE", rational_json(e.l)},
                             {"fE", e.f}});
  }
  j["cells"] = Json::array();
  for (const auto& c : model.cells) {
    Json axes = Json::array();
    for (const auto& a : c.axes) {
      if (a.divisor) axes.push_back({{"divisor", *a.divisor}});
      else axes.push_back({{"unit", true}});
    }
    Json cell{{"k", c.depth}, {"axes", axes}};
    if (c.unit_val_a != 0) cell["unitValA"] = c.unit_val_a;
    if (c.unit_val_m != 0) cell["unitValM"] = c.unit_val_m;
    if (c.copies != 1) cell["copies"] = c.copies;
    j["cells"].push_back(cell);
  }
  if (!model.forms.empty()) {
    Json forms = Json::object();
    for (const auto& [name, form] : model.forms) {
      Json fj = Json::object();
      if (!form.divisor_orders.empty()) fj["divisorOrders"] = form.divisor_orders;
      if (!form.unit_val_a.empty()) {
        Json u = Json::object();
        for (const auto& [idx, v] : form.unit_val_a) u[std::to_string(idx)] = v;
        fj["cellUnitValA"] = u;
      }
      forms[name] = fj;
    }
    j["forms"] = forms;
  }
  return j;
}

GlobalPointModel parse_point_model(const Json& j) {
  Fields f(j, "pointModel", {"schemaVersion", "n", "p", "fibers"});
  check_version(f);
  GlobalPointModel m;
  m.n = positive_dimension(f.integer("n"), f.field("n"));
  m.params = make_params(f.integer("p"), 1);
  const Json& fibers = f.array("fibers");
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    const std::string where = "fibers[" + std::to_string(i) + "]";
    Fields fb(fibers[i], where, {"label", "terms"});
    m.fibers.push_back({fb.has("label") ? fb.string("label") : std::to_string(i),
                        IntPolynomial(m.n, parse_terms(fb.at("terms"), m.n, where + ".terms"))});
  }
  return m;
}

GlobalPointModel load_point_model(const std::filesystem::path& path) { return parse_point_model(read_json_file(path)); }

CellMeasureModel parse_cell_measure_model(const Json& j) {
  Fields f(j, "cellMeasure", {"schemaVersion", "p", "N", "cells"});
  check_version(f);
  CellMeasureModel m;
  m.params = make_params(f.integer("p"), 1);
  m.N = positive_dimension(f.integer("N"), f.field("N"));
  const Json& cells = f.array("cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string where = "cells[" + std::to_string(i) + "]";
    Fields c(cells[i], where, {"label", "G", "nu", "j", "family"});
    MeasureCell cell;
    cell.label = c.string("label");
    const Json& g = c.array("G");
    for (const auto& v : g) cell.g.push_back(Fields::as_rational(v, where + ".G"));
    cell.nu = c.rational("nu");
    if (c.has("j")) cell.j = c.integer("j");
    if (c.has("family")) cell.family = c.string("family");
    m.cells.push_back(std::move(cell));
  }
  m.validate();
  return m;
}

CellMeasureModel load_cell_measure_model(const std::filesystem::path& path) {
  return parse_cell_measure_model(read_json_file(path));
}

Json to_json(const CellMeasureModel& model) {
  Json j{{"schemaVersion", kSchemaVersion}, {"p", model.params.p()}, {"N", model.N}, {"cells", Json::array()}};
  for (const auto& c : model.cells) {
    Json g = Json::array();
    for (const auto& v : c.g) g.push_back(rational_json(v));
    Json cell{{"label", c.label}, {"G", g}, {"nu", rational_json(c.nu)}};
    cell["j"] = c.j ? Json(*c.j) : Json(nullptr);
    if (c.family) cell["family"] = *c.family;
    j["cells"].push_back(cell);
  }
  return j;
}

TwoNormData parse_two_norm_data(const Json& j) {
  Fields f(j, "twoNorms", {"schemaVersion", "q", "s1", "s2", "cells"});
  check_version(f);
  TwoNormData d;
  d.q = f.integer("q");
  if (d.q < 2) throw SchemaError("twoNorms.q: must be >= 2");
  d.s1 = f.rational("s1");
  d.s2 = f.rational("s2");
  const Json& cells = f.array("cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Fields c(cells[i], "cells[" + std::to_string(i) + "]", {"label", "I1", "I2"});
    d.cells.push_back({c.string("label"), c.rational("I1"), c.rational("I2")});
  }
  return d;
}

TwoNormData load_two_norm_data(const std::filesystem::path& path) { return parse_two_norm_data(read_json_file(path)); }

Json rational_json(const Rational& x) { return to_string(x); }

Json to_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(rational_json(c));
  return {{"scale", s.variable().scale()}, {"lowest", s.lowest()}, {"validOrder", s.valid_order()}, {"coeffs", coeffs}};
}

Json to_json(const ZetaRational& r) {
  auto poly = [](const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(rational_json(c));
    return a;
  };
  return {{"scale", r.variable().scale()},
          {"numerator", poly(r.numerator())},
          {"denominator", poly(r.denominator())},
          {"poleOrder", r.pole_order()},
          {"text", r.to_string()},
          {"latex", r.to_latex()}};
}

}  // namespace igusa
