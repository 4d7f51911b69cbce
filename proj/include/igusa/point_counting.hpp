#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "igusa/padic.hpp"
#include "igusa/rational.hpp"
#include "igusa/zeta_rational.hpp"

namespace igusa {

struct Term {
  long coeff = 0;
  std::vector<int> exps;
};

// Multivariate integer polynomial in n variables. Terms are kept sorted by
// exponent vector with no duplicates and no zero coefficients.
class IntPolynomial {
 public:
  IntPolynomial(int n, std::vector<Term> terms);

  int nvars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree_in(int var) const;

  // Partial derivative with respect to variable var.
  IntPolynomial derivative(int var) const;
  // Value at x modulo m (m < 2^63). Coordinates are taken as given.
  std::uint64_t eval_mod(const std::vector<std::uint64_t>& x, std::uint64_t m) const;

  std::string to_string() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

enum class Domain {
  full,     // the unit polydisc O^n
  shifted,  // pi O^n, counted as p^((k-1)n) residues mod p^k
};

struct CountProfile {
  long p = 0;
  int k_max = 0;
  Domain domain = Domain::full;
  std::vector<Integer> counts;  // counts[k-1] = N_k
  std::uint64_t tree_width = 0;  // largest non-smooth frontier (Hensel only)

  const Integer& N(int k) const { return counts.at(static_cast<std::size_t>(k - 1)); }
};

inline constexpr double kDefaultGuard = 1e8;

struct CountOptions {
  double guard = kDefaultGuard;  // maximum number of evaluated points for naive enumeration
  unsigned threads = 0;          // 0: hardware concurrency
};

// Number of x in the domain, taken mod p^k, with f(x) = 0 mod p^k, by direct
// enumeration. Throws GuardExceeded when the point budget would be exceeded.
Integer count_zeros_naive(const IntPolynomial& f, long p, int k, Domain domain,
                          const CountOptions& opts = {});

// N_1 .. N_kmax by level-wise lifting: zeros mod p with a unit partial
// derivative are smooth and contribute p^((n-1)(k-1)) to N_k; the remaining
// zeros are lifted explicitly.
CountProfile count_zeros_hensel(const IntPolynomial& f, long p, int k_max, Domain domain);

// 1 - (1 - t) sum_k N_k p^(-kn) t^(k-1), valid to order k_max - 1.
TruncatedSeries local_zeta_series(const IntPolynomial& f, long p, int k_max);
TruncatedSeries local_zeta_series(const CountProfile& profile, int nvars);

struct Fiber {
  std::string label;
  IntPolynomial poly;
};

// A smooth model given by its fibers over the residue points: each fiber is a
// copy of pi O^n carrying the local expression a(u) of the form.
struct GlobalPointModel {
  int n = 1;
  ResidueParams params{2};
  std::vector<Fiber> fibers;

  long residue_count() const { return static_cast<long>(fibers.size()); }
};

// Summed shifted-domain counts N_k over all fibers.
std::vector<Integer> global_counts(const GlobalPointModel& model, int k_max);

// #X0/q^n - (1 - t) sum_k N_k q^(-kn) t^(k-1), valid to order k_max - 1.
TruncatedSeries global_norm_series(const GlobalPointModel& model, int k_max);
TruncatedSeries global_norm_series(const GlobalPointModel& model, const std::vector<Integer>& counts);

// The finite expression #X0/q^n - (1 - t0) sum_{k<=kmax} N_k q^(-kn) t0^(k-1).
Rational global_norm_partial_form(const GlobalPointModel& model, const std::vector<Integer>& counts,
                                  const Rational& t0);

struct NormLimits {
  Rational at_zero;      // s = 0
  Rational at_infinity;  // s -> infinity
};

NormLimits norm_limits(const GlobalPointModel& model);

}  // namespace igusa
