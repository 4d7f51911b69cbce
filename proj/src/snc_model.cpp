#include "igusa/snc_model.hpp"

#include <set>

#include "igusa/errors.hpp"

namespace igusa {

void GlobalModel::validate() const {
  if (n < 1) throw SchemaError("model dimension n must be >= 1");
  if (r == 0) throw SchemaError("r must be nonzero");
  if (r_d < 1) throw SchemaError("rD must be >= 1");
  std::set<std::string> labels;
  for (const auto& e : divisors) {
    if (e.label.empty()) throw SchemaError("divisor with empty label");
    if (!labels.insert(e.label).second) throw SchemaError("duplicate divisor label '" + e.label + "'");
    if (e.a < 0) throw SchemaError("divisor '" + e.label + "': aE must be >= 0");
    if (e.f < 0) throw SchemaError("divisor '" + e.label + "': fE must be >= 0");
    if (Rational(e.d * r_d).get_den() != 1 || Rational(e.l * r_d).get_den() != 1) {
      throw SchemaError("divisor '" + e.label + "': rD*dE and rD*lE must be integers");
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const std::string where = "cell " + std::to_string(i);
    if (static_cast<int>(c.axes.size()) != n) {
      throw SchemaError(where + " has " + std::to_string(c.axes.size()) + " axes, expected " + std::to_string(n));
    }
    if (c.depth < 0) throw SchemaError(where + ": depth must be >= 0");
    if (c.copies < 1) throw SchemaError(where + ": copies must be >= 1");
    std::set<std::string> seen;
    for (const auto& ax : c.axes) {
      if (!ax.divisor) continue;
      if (!labels.count(*ax.divisor)) throw SchemaError(where + " references unknown divisor '" + *ax.divisor + "'");
      if (!seen.insert(*ax.divisor).second) {
        throw SchemaError(where + " uses divisor '" + *ax.divisor + "' on two axes");
      }
    }
  }
  for (const auto& [name, form] : forms) {
    for (const auto& [label, a] : form.divisor_orders) {
      if (!labels.count(label)) throw SchemaError("form '" + name + "' overrides unknown divisor '" + label + "'");
      if (a < 0) throw SchemaError("form '" + name + "': orders must be >= 0");
    }
    for (const auto& [idx, a] : form.unit_val_a) {
      if (idx >= cells.size()) throw SchemaError("form '" + name + "' overrides missing cell " + std::to_string(idx));
      if (a < 0) throw SchemaError("form '" + name + "': unit valuations must be >= 0");
    }
  }
}

const DivisorData& GlobalModel::divisor(const std::string& label) const {
  for (const auto& e : divisors) {
    if (e.label == label) return e;
  }
  throw SchemaError("unknown divisor '" + label + "'");
}

FormOnModel GlobalModel::form(const std::string& name) const {
  if (name.empty()) return {};
  auto it = forms.find(name);
  if (it == forms.end()) throw SchemaError("model has no form named '" + name + "'");
  return it->second;
}

long GlobalModel::order_of(const std::string& label, const FormOnModel& form) const {
  auto it = form.divisor_orders.find(label);
  return it != form.divisor_orders.end() ? it->second : divisor(label).a;
}

ChartCell GlobalModel::chart_cell(std::size_t index, const FormOnModel& form) const {
  const ModelCell& mc = cells.at(index);
  ChartCell cell;
  cell.depth = mc.depth;
  cell.r = r;
  cell.r_d = r_d;
  cell.unit_val_m = mc.unit_val_m;
  auto it = form.unit_val_a.find(index);
  cell.unit_val_a = it != form.unit_val_a.end() ? it->second : mc.unit_val_a;
  for (const auto& ax : mc.axes) {
    AxisExponent e;
    if (ax.divisor) {
      const DivisorData& d = divisor(*ax.divisor);
      e.a = order_of(d.label, form);
      e.m = d.m;
      e.d = d.d;
    }
    cell.axes.push_back(e);
  }
  return cell;
}

KltReport klt_check(const std::vector<DivisorData>& divisors) {
  KltReport rep;
  for (const auto& e : divisors) {
    if (Rational(e.m) - e.d + 1 <= 0) {
      rep.klt = false;
      rep.violators.push_back(e.label);
    }
  }
  return rep;
}

Threshold threshold_s_r(const std::vector<DivisorData>& divisors, long r) {
  const KltReport rep = klt_check(divisors);
  if (!rep.klt) throw DomainError("klt violated along divisor '" + rep.violators.front() + "'");
  Threshold th;
  th.infinite = true;
  for (const auto& e : divisors) {
    const Rational slope = Rational(r) * e.l - e.f;
    if (slope <= 0) continue;
    const Rational ratio = (Rational(e.m) - e.d + 1) / slope;
    if (th.infinite || ratio < th.value) {
      th.infinite = false;
      th.value = ratio;
    }
  }
  return th;
}

Poly denominator_shape(const GlobalModel& model, const FormOnModel& form) {
  Poly prod{1};
  const long q = model.params.q();
  for (const auto& e : model.divisors) {
    AxisExponent ax{model.order_of(e.label, form), e.m, e.d};
    const long k = axis_tau_exponent(ax, model.r, model.r_d);
    if (k == 0) continue;  // constant q^(m-d+1) - 1, absorbed into the numerator
    const Rational c = q_pow_exact(q, Rational(e.m) - e.d + 1);
    if (k > 0) {
      prod = prod * (Poly::constant(c) - Poly::monomial(1, static_cast<int>(k)));
    } else {
      prod = prod * (Poly::monomial(c, static_cast<int>(-k)) - Poly{1});
    }
  }
  return prod;
}

ZetaRational assemble_zeta(const GlobalModel& model, const FormOnModel& form) {
  const ZetaVariable var{model.r_d};
  ZetaRational total = ZetaRational::constant(0, var);
  for (std::size_t i = 0; i < model.cells.size(); ++i) {
    total += cell_integral(model.chart_cell(i, form), model.params) * Rational(model.cells[i].copies);
  }
  const Poly shape = denominator_shape(model, form);
  if (!Poly::divmod(shape, total.denominator()).second.is_zero()) {
    throw ShapeError("assembled denominator " + total.denominator().to_string() +
                     " does not divide the divisor product " + shape.to_string());
  }
  return total;
}

ZetaRational assemble_zeta(const GlobalModel& model, const std::string& form_name) {
  return assemble_zeta(model, model.form(form_name));
}

Rational evaluate_norm(const GlobalModel& model, const FormOnModel& form, const Rational& tau0) {
  return assemble_zeta(model, form).evaluate(tau0);
}

}  // namespace igusa
