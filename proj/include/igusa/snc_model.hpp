#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "igusa/monomial_integrals.hpp"
#include "igusa/padic.hpp"
#include "igusa/polynomial.hpp"
#include "igusa/zeta_rational.hpp"

namespace igusa {

// Orders of one divisor E on the resolution: the form (a), the relative
// canonical class (m), the boundary (d), the auxiliary divisor (l) and the
// fixed locus (f).
struct DivisorData {
  std::string label;
  long a = 0;
  long m = 0;
  Rational d = 0;
  Rational l = 0;
  long f = 0;
};

// A cell axis is either the coordinate of a divisor, or a plain unit axis
// (all exponents zero).
struct ModelAxis {
  std::optional<std::string> divisor;
};

struct ModelCell {
  int depth = 0;
  std::vector<ModelAxis> axes;
  long unit_val_a = 0;
  long unit_val_m = 0;
  // Number of disjoint translated copies of this polydisc.
  long copies = 1;
};

// One form in chart coordinates: overrides of the divisor orders a_E and of
// per-cell unit valuations. Anything not overridden uses the model's table.
struct FormOnModel {
  std::map<std::string, long> divisor_orders;
  std::map<std::size_t, long> unit_val_a;
};

struct GlobalModel {
  int n = 1;
  long r = 1;
  int r_d = 1;
  ResidueParams params{2};
  std::vector<DivisorData> divisors;
  std::vector<ModelCell> cells;
  std::map<std::string, FormOnModel> forms;

  // Checks the structural invariants; throws SchemaError.
  void validate() const;
  const DivisorData& divisor(const std::string& label) const;
  // The form by name; an empty name selects the table values.
  FormOnModel form(const std::string& name) const;
  // Divisor orders a_E after applying the form.
  long order_of(const std::string& label, const FormOnModel& form) const;
  ChartCell chart_cell(std::size_t index, const FormOnModel& form) const;
};

// Extended nonnegative rational: value, or +infinity.
struct Threshold {
  bool infinite = false;
  Rational value = 0;
};

struct KltReport {
  bool klt = true;
  std::vector<std::string> violators;
};

KltReport klt_check(const std::vector<DivisorData>& divisors);

// inf over {E : r l_E > f_E} of (m_E - d_E + 1) / (r l_E - f_E). Throws
// DomainError naming a divisor that violates klt.
Threshold threshold_s_r(const std::vector<DivisorData>& divisors, long r);

// The guaranteed denominator t_D^e * prod_E (q^(m_E - d_E + 1) - t_D^(r_D (a_E - r d_E)))
// without its t_D^e part; factors with a negative exponent are cleared by t_D
// powers and constant factors are omitted.
Poly denominator_shape(const GlobalModel& model, const FormOnModel& form);

// Sum of copies * cell_integral over all cells, with the denominator shape
// verified (ShapeError if the normalized denominator does not divide it).
ZetaRational assemble_zeta(const GlobalModel& model, const FormOnModel& form);
ZetaRational assemble_zeta(const GlobalModel& model, const std::string& form_name = "");

Rational evaluate_norm(const GlobalModel& model, const FormOnModel& form, const Rational& tau0);

}  // namespace igusa
