#pragma once

#include <string>
#include <vector>

#include "igusa/polynomial.hpp"
#include "igusa/rational.hpp"

namespace igusa {

// tau = q^(-s/scale); scale 1 is the usual t = q^(-s).
class ZetaVariable {
 public:
  explicit ZetaVariable(int scale = 1);
  int scale() const { return scale_; }
  friend bool operator==(ZetaVariable, ZetaVariable) = default;

 private:
  int scale_;
};

// numerator / (tau^e * denominator) with exact rational coefficients.
//
// Always kept canonical: numerator and denominator are coprime integer
// polynomials with no common integer content, denominator(0) > 0, and the
// pole order e is as small as the numerator allows.
class ZetaRational {
 public:
  ZetaRational() : ZetaRational(CanonicalTag{}, ZetaVariable{1}, Poly{}, Poly{1}, 0) {}
  ZetaRational(ZetaVariable var, const Poly& num, const Poly& den, int pole_order = 0);

  static ZetaRational constant(const Rational& c, ZetaVariable var = ZetaVariable{1});
  // c * tau^k for any integer k.
  static ZetaRational monomial(const Rational& c, int k, ZetaVariable var = ZetaVariable{1});

  ZetaVariable variable() const { return var_; }
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  int pole_order() const { return e_; }
  bool is_zero() const { return num_.is_zero(); }
  // True iff the function does not depend on tau.
  bool is_constant() const { return e_ == 0 && num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant_value() const;

  // Value at tau0; throws DivergenceError at a pole.
  Rational evaluate(const Rational& tau0) const;
  // Re-expresses in tau' with tau = tau'^(new_scale / scale).
  ZetaRational rescaled(int new_scale) const;

  ZetaRational operator-() const;
  friend ZetaRational operator+(const ZetaRational& a, const ZetaRational& b);
  friend ZetaRational operator-(const ZetaRational& a, const ZetaRational& b);
  friend ZetaRational operator*(const ZetaRational& a, const ZetaRational& b);
  friend ZetaRational operator/(const ZetaRational& a, const ZetaRational& b);
  friend ZetaRational operator*(const ZetaRational& a, const Rational& c);
  ZetaRational& operator+=(const ZetaRational& b) { return *this = *this + b; }
  ZetaRational& operator*=(const ZetaRational& b) { return *this = *this * b; }
  friend bool operator==(const ZetaRational& a, const ZetaRational& b);

  std::string to_string() const;
  std::string to_latex() const;

 private:
  struct CanonicalTag {};
  ZetaRational(CanonicalTag, ZetaVariable var, Poly num, Poly den, int e)
      : var_(var), num_(std::move(num)), den_(std::move(den)), e_(e) {}
  friend ZetaRational rf_normalize(ZetaVariable, const Poly&, const Poly&, int);

  ZetaVariable var_;
  Poly num_;
  Poly den_;
  int e_ = 0;
};

// Canonical form of num / (tau^e den). Throws DomainError on a zero denominator.
ZetaRational rf_normalize(ZetaVariable var, const Poly& num, const Poly& den, int pole_order = 0);

// Laurent coefficients c_j for j = lowest .. valid_order.
class TruncatedSeries {
 public:
  TruncatedSeries(ZetaVariable var, int lowest, std::vector<Rational> coeffs);

  ZetaVariable variable() const { return var_; }
  int lowest() const { return lowest_; }
  int valid_order() const { return lowest_ + static_cast<int>(coeffs_.size()) - 1; }
  // Zero outside [lowest, valid_order].
  Rational coeff(int j) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Drops coefficients above order k (k >= lowest - 1).
  TruncatedSeries truncated(int k) const;
  Rational partial_sum(const Rational& tau0) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  ZetaVariable var_;
  int lowest_;
  std::vector<Rational> coeffs_;
};

// Laurent expansion at tau = 0 up to order k (k >= -e).
TruncatedSeries rf_taylor(const ZetaRational& r, int k);

// Exact agreement of all coefficients up to order k. Throws DomainError if the
// variables differ or either series is not valid to order k.
bool series_match(const TruncatedSeries& a, const TruncatedSeries& b, int k);

}  // namespace igusa
