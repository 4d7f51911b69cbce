#pragma once

#include <vector>

#include "igusa/padic.hpp"
#include "igusa/rational.hpp"
#include "igusa/zeta_rational.hpp"

namespace igusa {

// Exponent data of one coordinate axis of a chart. The integrand along the
// axis is |u|^(s*a + m - (1 - r s) d), whose closed form is expressed through
// X = q^-(m - d + 1) * t_D^(r_D (a - r d)).
struct AxisExponent {
  long a = 0;
  long m = 0;
  Rational d = 0;

  friend bool operator==(const AxisExponent&, const AxisExponent&) = default;
};

// One monomial chart pi^k O^n of a log resolution.
struct ChartCell {
  int depth = 0;
  std::vector<AxisExponent> axes;
  long unit_val_a = 0;  // |a_i(u)| = q^-unit_val_a on the cell
  long unit_val_m = 0;  // m_i(u) = q^-unit_val_m on the cell
  long r = 1;
  int r_d = 1;
};

// Integer t_D-exponent r_D (a - r d) of an axis; throws DomainError if not integral.
long axis_tau_exponent(const AxisExponent& ax, long r, int r_d);

// True when the axis integral diverges for every s: m - d + 1 <= 0 and a - r d <= 0.
bool axis_diverges(const AxisExponent& ax, long r);

// Integral of |u|^(s a + m - (1 - r s) d) over pi^k O, i.e.
// (1 - q^-1) X^k / (1 - X). Throws DivergenceError for divergent data.
ZetaRational axis_integral(const AxisExponent& ax, int k, const ResidueParams& params, long r,
                           int r_d);

// q^-m t_D^(r_D (a - r m)) times the product of the axis integrals.
ZetaRational cell_integral(const ChartCell& cell, const ResidueParams& params);

}  // namespace igusa
