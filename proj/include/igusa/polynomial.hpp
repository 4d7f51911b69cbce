#pragma once

#include <string>
#include <utility>
#include <vector>

#include "igusa/rational.hpp"

namespace igusa {

// Dense univariate polynomial over Q, coefficients stored low degree first.
// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Exponent of the largest power of the variable dividing *this; -1 for zero.
  int low_degree() const;

  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& x) const;
  // p(x) -> p(x^d)
  Poly compose_power(int d) const;
  // Divides by x^k; the caller guarantees x^k | *this.
  Poly shift_down(int k) const;
  Poly shift_up(int k) const;
  Poly derivative() const;
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  // Euclidean division; throws DomainError when b is zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd (zero only when both inputs are zero).
  static Poly gcd(Poly a, Poly b);

  // e.g. "3 - t" with terms in ascending degree.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace igusa
