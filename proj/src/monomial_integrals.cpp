#include "igusa/monomial_integrals.hpp"

#include <string>

#include "igusa/errors.hpp"

namespace igusa {

namespace {

std::string describe(const AxisExponent& ax) {
  return "axis (a=" + std::to_string(ax.a) + ", m=" + std::to_string(ax.m) + ", d=" + to_string(ax.d) + ")";
}

}  // namespace

long axis_tau_exponent(const AxisExponent& ax, long r, int r_d) {
  const Rational e = Rational(r_d) * (Rational(ax.a) - Rational(r) * ax.d);
  long out = 0;
  if (!as_long(e, out)) {
    throw DomainError(describe(ax) + ": r_D (a - r d) = " + to_string(e) + " is not an integer");
  }
  return out;
}

bool axis_diverges(const AxisExponent& ax, long r) {
  return Rational(ax.m) - ax.d + 1 <= 0 && Rational(ax.a) - Rational(r) * ax.d <= 0;
}

ZetaRational axis_integral(const AxisExponent& ax, int k, const ResidueParams& params, long r,
                           int r_d) {
  if (k < 0) throw DomainError("negative cell depth");
  if (axis_diverges(ax, r)) throw DivergenceError("divergent " + describe(ax));
  const ZetaVariable var{r_d};
  const long q = params.q();
  const long tau_exp = axis_tau_exponent(ax, r, r_d);
  const Rational x_coeff = q_pow_exact(q, -(Rational(ax.m) - ax.d + 1));

  const Rational prefactor = 1 - Rational(1, q);
  // X^k with X = x_coeff * tau^tau_exp
  const ZetaRational x_pow_k =
      ZetaRational::monomial(prefactor * rational_pow(x_coeff, k), static_cast<int>(tau_exp * k), var);
  const ZetaRational one_minus_x =
      ZetaRational::constant(1, var) - ZetaRational::monomial(x_coeff, static_cast<int>(tau_exp), var);
  return x_pow_k / one_minus_x;
}

ZetaRational cell_integral(const ChartCell& cell, const ResidueParams& params) {
  if (cell.axes.empty()) throw DomainError("chart cell without axes");
  if (cell.r_d < 1) throw DomainError("r_D must be >= 1");
  if (cell.r == 0) throw DomainError("r must be nonzero");
  const ZetaVariable var{cell.r_d};
  const long unit_exp = static_cast<long>(cell.r_d) * (cell.unit_val_a - cell.r * cell.unit_val_m);
  ZetaRational acc =
      ZetaRational::monomial(q_pow(params.q(), -cell.unit_val_m), static_cast<int>(unit_exp), var);
  for (const auto& ax : cell.axes) acc *= axis_integral(ax, cell.depth, params, cell.r, cell.r_d);
  return acc;
}

}  // namespace igusa
