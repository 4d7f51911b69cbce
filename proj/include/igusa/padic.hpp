#pragma once

#include <optional>

#include "igusa/rational.hpp"

namespace igusa {

// Residue field data: p prime, q = p^f. The uniformizer is implicit, so
// multiplying by it is a +1 shift of valuation, and |u| = q^(-v(u)).
class ResidueParams {
 public:
  ResidueParams(long p, int f = 1);

  long p() const { return p_; }
  int f() const { return f_; }
  long q() const { return q_; }

  friend bool operator==(const ResidueParams&, const ResidueParams&) = default;

 private:
  long p_;
  int f_;
  long q_;
};

bool is_prime(long n);

// v_p(x) for x != 0; std::nullopt stands for v(0) = +infinity.
using Valuation = std::optional<long>;

Valuation padic_valuation(const Rational& x, long p);

// Valuation order with nullopt as +infinity.
inline bool valuation_less(const Valuation& a, const Valuation& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

}  // namespace igusa
