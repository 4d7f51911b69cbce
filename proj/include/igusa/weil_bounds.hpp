#pragma once

#include <optional>
#include <vector>

#include "igusa/polynomial.hpp"
#include "igusa/rational.hpp"

namespace igusa {

// Betti numbers h^1 .. h^(2n-1) of an n-dimensional variety.
struct BettiProfile {
  int n = 1;
  std::vector<long> h;

  void validate() const;
};

// a + b sqrt(q) with integer a, b and q >= 1.
struct QuadraticInteger {
  Integer a = 0;
  Integer b = 0;
  long q = 1;

  int sign() const;
};

// q^n + 1 - sum_i h^i q^(i/2), exactly.
QuadraticInteger count_lower_bound(const BettiProfile& profile, long q);

// x^(2n) + 1 - sum_i h^i x^i, the bound as a polynomial in x = sqrt(q).
Poly weil_polynomial(const BettiProfile& profile);

// Smallest positive integer Q with q^n + 1 >= sum_i h^i q^(i/2) for all real q >= Q.
long q0_from_betti(const BettiProfile& profile);

struct Q0Report {
  long q0 = 1;
  long window_end = 1;  // count_lower_bound >= 0 was verified on [q0, window_end]
  // Curves only: the closed form 4g^2 - 2, and whether it disagrees with q0.
  std::optional<long> curve_closed_form;
  bool closed_form_discrepancy = false;
};

// q0 with the downward/upward integer verification. Throws ShapeError if the
// verification contradicts the root isolation.
Q0Report q0_report(const BettiProfile& profile, long window = 200);

// Smallest prime power >= q.
long next_prime_power(long q);

inline bool positive_measure_check(long residue_count) { return residue_count > 0; }

}  // namespace igusa
