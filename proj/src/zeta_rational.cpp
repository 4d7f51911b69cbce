#include "igusa/zeta_rational.hpp"

#include <algorithm>
#include <numeric>

#include "igusa/errors.hpp"

namespace igusa {

ZetaVariable::ZetaVariable(int scale) : scale_(scale) {
  if (scale < 1) throw DomainError("zeta variable scale must be >= 1");
}

namespace {

// Makes num and den integral with joint content 1 and den(0) > 0.
void clear_content(Poly& num, Poly& den) {
  Integer lcm_den = 1;
  Integer gcd_num = 0;
  for (const Poly* p : {&num, &den}) {
    for (const auto& c : p->coeffs()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  for (const Poly* p : {&num, &den}) {
    for (const auto& c : p->coeffs()) {
      Integer scaled = c.get_num() * (lcm_den / c.get_den());
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
  }
  Rational factor(lcm_den, gcd_num);
  factor.canonicalize();
  if (den.coeff(0) < 0) factor = -factor;
  num *= factor;
  den *= factor;
}

}  // namespace

ZetaRational rf_normalize(ZetaVariable var, const Poly& num_in, const Poly& den_in, int e) {
  if (den_in.is_zero()) throw DomainError("zero denominator in rational function");
  Poly num = num_in;
  Poly den = den_in;
  if (num.is_zero()) return ZetaRational(ZetaRational::CanonicalTag{}, var, Poly{}, Poly{1}, 0);

  const int dl = den.low_degree();
  den = den.shift_down(dl);
  e += dl;
  const int nl = num.low_degree();
  // Cancel tau powers against the pole; a negative e becomes numerator powers.
  const int cancel = std::min(nl, std::max(e, 0));
  num = num.shift_down(cancel);
  e -= cancel;
  if (e < 0) {
    num = num.shift_up(-e);
    e = 0;
  }

  Poly g = Poly::gcd(num, den);
  if (g.degree() > 0) {
    num = Poly::divmod(num, g).first;
    den = Poly::divmod(den, g).first;
  }
  clear_content(num, den);
  return ZetaRational(ZetaRational::CanonicalTag{}, var, std::move(num), std::move(den), e);
}

ZetaRational::ZetaRational(ZetaVariable var, const Poly& num, const Poly& den, int pole_order)
    : ZetaRational(rf_normalize(var, num, den, pole_order)) {}

ZetaRational ZetaRational::constant(const Rational& c, ZetaVariable var) {
  if (c == 0) return ZetaRational(CanonicalTag{}, var, Poly{}, Poly{1}, 0);
  return ZetaRational(CanonicalTag{}, var, Poly::constant(Rational(c.get_num())),
                      Poly::constant(Rational(c.get_den())), 0);
}

ZetaRational ZetaRational::monomial(const Rational& c, int k, ZetaVariable var) {
  if (k >= 0) return ZetaRational(var, Poly::monomial(c, k), Poly{1}, 0);
  return ZetaRational(var, Poly::constant(c), Poly{1}, -k);
}

Rational ZetaRational::constant_value() const {
  if (!is_constant()) throw DomainError("rational function " + to_string() + " is not constant");
  return num_.coeff(0) / den_.coeff(0);
}

Rational ZetaRational::evaluate(const Rational& tau0) const {
  if (num_.is_zero()) return 0;
  const Rational d = den_.eval(tau0);
  if (d == 0 || (e_ > 0 && tau0 == 0)) {
    throw DivergenceError("evaluation at a pole: tau = " + igusa::to_string(tau0));
  }
  return num_.eval(tau0) / (d * rational_pow(tau0, e_));
}

ZetaRational ZetaRational::rescaled(int new_scale) const {
  if (new_scale == var_.scale()) return *this;
  if (new_scale % var_.scale() != 0) {
    throw DomainError("cannot rescale zeta variable from " + std::to_string(var_.scale()) + " to " +
                      std::to_string(new_scale));
  }
  const int d = new_scale / var_.scale();
  return ZetaRational(ZetaVariable{new_scale}, num_.compose_power(d), den_.compose_power(d), e_ * d);
}

namespace {

int common_scale(ZetaVariable a, ZetaVariable b) {
  const int sa = a.scale();
  const int sb = b.scale();
  if (sa == sb) return sa;
  if (sb % sa == 0) return sb;
  if (sa % sb == 0) return sa;
  throw DomainError("incompatible zeta variable scales " + std::to_string(sa) + " and " +
                    std::to_string(sb));
}

}  // namespace

ZetaRational ZetaRational::operator-() const { return ZetaRational(var_, -num_, den_, e_); }

ZetaRational operator+(const ZetaRational& a0, const ZetaRational& b0) {
  const int s = common_scale(a0.var_, b0.var_);
  const ZetaRational a = a0.rescaled(s);
  const ZetaRational b = b0.rescaled(s);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int e = std::max(a.e_, b.e_);
  Poly num = (a.num_ * b.den_).shift_up(e - a.e_) + (b.num_ * a.den_).shift_up(e - b.e_);
  return rf_normalize(ZetaVariable{s}, num, a.den_ * b.den_, e);
}

ZetaRational operator-(const ZetaRational& a, const ZetaRational& b) { return a + (-b); }

ZetaRational operator*(const ZetaRational& a0, const ZetaRational& b0) {
  const int s = common_scale(a0.var_, b0.var_);
  const ZetaRational a = a0.rescaled(s);
  const ZetaRational b = b0.rescaled(s);
  return rf_normalize(ZetaVariable{s}, a.num_ * b.num_, a.den_ * b.den_, a.e_ + b.e_);
}

ZetaRational operator/(const ZetaRational& a0, const ZetaRational& b0) {
  if (b0.is_zero()) throw DomainError("division by the zero rational function");
  const int s = common_scale(a0.var_, b0.var_);
  const ZetaRational a = a0.rescaled(s);
  const ZetaRational b = b0.rescaled(s);
  return rf_normalize(ZetaVariable{s}, a.num_ * b.den_.shift_up(b.e_), a.den_ * b.num_, a.e_);
}

ZetaRational operator*(const ZetaRational& a, const Rational& c) {
  return rf_normalize(a.var_, a.num_ * c, a.den_, a.e_);
}

bool operator==(const ZetaRational& a, const ZetaRational& b) {
  if (a.var_ == b.var_) return a.e_ == b.e_ && a.num_ == b.num_ && a.den_ == b.den_;
  return (a - b).is_zero();
}

namespace {

std::string var_name(ZetaVariable v) { return v.scale() == 1 ? "t" : "t_D"; }

std::string latex_rational(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return std::string(c < 0 ? "-" : "") + "\\frac{" + Integer(abs(c.get_num())).get_str() + "}{" +
         c.get_den().get_str() + "}";
}

std::string latex_poly(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational c = p.coeff(i);
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string mono;
    if (i >= 1) mono = var + (i > 1 ? "^{" + std::to_string(i) + "}" : "");
    if (mono.empty()) {
      out += latex_rational(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += latex_rational(mag) + " " + mono;
    }
  }
  return out;
}

}  // namespace

std::string ZetaRational::to_string() const {
  const std::string v = var_name(var_);
  std::string den = den_.to_string(v);
  if (e_ > 0) {
    std::string pole = v + (e_ > 1 ? "^" + std::to_string(e_) : "");
    den = (den_ == Poly{1}) ? pole : pole + "*(" + den + ")";
  } else if (den_ == Poly{1}) {
    return num_.to_string(v);
  } else {
    den = "(" + den + ")";
  }
  return "(" + num_.to_string(v) + ")/" + den;
}

std::string ZetaRational::to_latex() const {
  const std::string v = var_name(var_);
  std::string den = latex_poly(den_, v);
  if (e_ > 0) {
    std::string pole = v + (e_ > 1 ? "^{" + std::to_string(e_) + "}" : "");
    if (den_ == Poly{1}) {
      den = pole;
    } else {
      den = pole + "\\left(" + den + "\\right)";
    }
  } else if (den_ == Poly{1}) {
    return latex_poly(num_, v);
  }
  return "\\frac{" + latex_poly(num_, v) + "}{" + den + "}";
}

TruncatedSeries::TruncatedSeries(ZetaVariable var, int lowest, std::vector<Rational> coeffs)
    : var_(var), lowest_(lowest), coeffs_(std::move(coeffs)) {}

Rational TruncatedSeries::coeff(int j) const {
  if (j < lowest_ || j > valid_order()) return 0;
  return coeffs_[static_cast<std::size_t>(j - lowest_)];
}

TruncatedSeries TruncatedSeries::truncated(int k) const {
  if (k >= valid_order()) return *this;
  if (k < lowest_ - 1) throw DomainError("truncation below the lowest exponent");
  return TruncatedSeries(var_, lowest_,
                         std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (k - lowest_ + 1)));
}

Rational TruncatedSeries::partial_sum(const Rational& tau0) const {
  Rational acc = 0;
  for (int j = lowest_; j <= valid_order(); ++j) acc += coeff(j) * rational_pow(tau0, j);
  return acc;
}

TruncatedSeries rf_taylor(const ZetaRational& r, int k) {
  const int e = r.pole_order();
  if (k < -e) throw DomainError("expansion order below the pole order");
  const Poly& num = r.numerator();
  const Poly& den = r.denominator();
  const int len = k + e + 1;
  std::vector<Rational> c(static_cast<std::size_t>(len));
  const Rational inv0 = 1 / den.coeff(0);
  for (int j = 0; j < len; ++j) {
    Rational acc = num.coeff(j);
    const int top = std::min(j, den.degree());
    for (int i = 1; i <= top; ++i) acc -= den.coeff(i) * c[static_cast<std::size_t>(j - i)];
    c[static_cast<std::size_t>(j)] = acc * inv0;
  }
  return TruncatedSeries(r.variable(), -e, std::move(c));
}

bool series_match(const TruncatedSeries& a, const TruncatedSeries& b, int k) {
  if (!(a.variable() == b.variable())) throw DomainError("series in different zeta variables");
  if (a.valid_order() < k || b.valid_order() < k) {
    throw DomainError("series not valid to order " + std::to_string(k));
  }
  for (int j = std::min(a.lowest(), b.lowest()); j <= k; ++j) {
    if (a.coeff(j) != b.coeff(j)) return false;
  }
  return true;
}

}  // namespace igusa
