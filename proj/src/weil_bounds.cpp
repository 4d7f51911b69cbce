#include "igusa/weil_bounds.hpp"

#include <string>

#include "igusa/errors.hpp"
#include "igusa/padic.hpp"

namespace igusa {

void BettiProfile::validate() const {
  if (n < 1) throw SchemaError("dimension must be >= 1");
  if (static_cast<int>(h.size()) != 2 * n - 1) {
    throw SchemaError("expected " + std::to_string(2 * n - 1) + " Betti numbers, got " + std::to_string(h.size()));
  }
  for (long v : h) {
    if (v < 0) throw SchemaError("Betti numbers must be nonnegative");
  }
}

int QuadraticInteger::sign() const {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0 || q == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 q
  const Integer lhs = a * a;
  const Integer rhs = b * b * q;
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

QuadraticInteger count_lower_bound(const BettiProfile& profile, long q) {
  profile.validate();
  if (q < 1) throw DomainError("q must be >= 1");
  QuadraticInteger v;
  v.q = q;
  Integer qq(q);
  Integer qn;
  mpz_pow_ui(qn.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(profile.n));
  v.a = qn + 1;
  for (int i = 1; i <= 2 * profile.n - 1; ++i) {
    const long hi = profile.h[static_cast<std::size_t>(i - 1)];
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(i / 2));
    if (i % 2 == 0) v.a -= power * hi;
    else v.b -= power * hi;
  }
  return v;
}

Poly weil_polynomial(const BettiProfile& profile) {
  profile.validate();
  std::vector<Rational> c(static_cast<std::size_t>(2 * profile.n) + 1);
  c.front() = 1;
  c.back() = 1;
  for (int i = 1; i <= 2 * profile.n - 1; ++i) c[static_cast<std::size_t>(i)] -= profile.h[static_cast<std::size_t>(i - 1)];
  return Poly(std::move(c));
}

namespace {

// Product of the factors of odd multiplicity (Yun's square-free decomposition),
// scaled to a positive leading coefficient.
Poly odd_multiplicity_part(const Poly& p) {
  Poly a0 = Poly::gcd(p, p.derivative());
  Poly b = Poly::divmod(p, a0).first;
  Poly c = Poly::divmod(p.derivative(), a0).first;
  Poly d = c - b.derivative();
  Poly out{1};
  for (int i = 1; b.degree() > 0; ++i) {
    Poly ai = Poly::gcd(b, d);
    if (i % 2 == 1) out = out * ai;
    b = Poly::divmod(b, ai).first;
    c = Poly::divmod(d, ai).first;
    d = c - b.derivative();
  }
  return out.monic();
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = Poly::divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Distinct real roots of the square-free polynomial in (x, +infinity).
int roots_above(const std::vector<Poly>& seq, const Rational& x) {
  std::vector<int> at_x;
  std::vector<int> at_inf;
  for (const auto& s : seq) {
    at_x.push_back(sgn(s.eval(x)));
    at_inf.push_back(sgn(s.leading()));
  }
  return sign_changes(at_x) - sign_changes(at_inf);
}

// Sign of p(sqrt(m)) computed in Z[sqrt(m)].
int sign_at_sqrt(const Poly& p, long m) {
  Rational even = 0;
  Rational odd = 0;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational term = p.coeff(i) * q_pow(m, i / 2);
    if (i % 2 == 0) even += term;
    else odd += term;
  }
  Integer l;
  mpz_lcm(l.get_mpz_t(), even.get_den_mpz_t(), odd.get_den_mpz_t());
  const Rational scaled_even = even * l;
  const Rational scaled_odd = odd * l;
  return QuadraticInteger{scaled_even.get_num(), scaled_odd.get_num(), m}.sign();
}

Integer ceil_rational(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

}  // namespace

long q0_from_betti(const BettiProfile& profile) {
  const Poly p = weil_polynomial(profile);
  const Poly odd = odd_multiplicity_part(p);
  if (odd.degree() < 1) return 1;
  const std::vector<Poly> seq = sturm_sequence(odd);
  if (roots_above(seq, Rational(1)) == 0) return 1;

  // Cauchy bound on the roots.
  Rational bound = 0;
  for (const auto& c : odd.coeffs()) bound = std::max(bound, Rational(abs(c)));
  bound = bound / abs(odd.leading()) + 1;

  // Isolate the largest root S in (lo, hi] with hi^2 - lo^2 < 1.
  Rational lo = 1;
  Rational hi = bound;
  while (hi * hi - lo * lo >= 1 || roots_above(seq, lo) != 1) {
    const Rational mid = (lo + hi) / 2;
    if (roots_above(seq, mid) >= 1) lo = mid;
    else hi = mid;
  }
  // Smallest integer m with sqrt(m) >= S. odd < 0 on (lo, S), > 0 beyond.
  Integer start = ceil_rational(lo * lo);
  if (start < 1) start = 1;
  for (long m = start.get_si();; ++m) {
    if (Rational(m) == lo * lo) continue;
    if (Rational(m) >= hi * hi) return m;
    if (sign_at_sqrt(odd, m) >= 0) return m;
  }
}

Q0Report q0_report(const BettiProfile& profile, long window) {
  Q0Report rep;
  rep.q0 = q0_from_betti(profile);
  rep.window_end = rep.q0 + window;
  for (long q = rep.q0; q <= rep.window_end; ++q) {
    if (count_lower_bound(profile, q).sign() < 0) {
      throw ShapeError("Weil bound negative at q = " + std::to_string(q) + " above q0 = " + std::to_string(rep.q0));
    }
  }
  if (profile.n == 1 && profile.h[0] % 2 == 0 && profile.h[0] > 0) {
    const long g = profile.h[0] / 2;
    rep.curve_closed_form = 4 * g * g - 2;
    rep.closed_form_discrepancy = (*rep.curve_closed_form != rep.q0);
  }
  return rep;
}

long next_prime_power(long q) {
  for (long m = std::max(2L, q);; ++m) {
    long base = 0;
    for (long d = 2; d <= m; ++d) {
      if (m % d == 0) {
        base = d;
        break;
      }
    }
    long v = m;
    while (v % base == 0) v /= base;
    if (v == 1) return m;
  }
}

}  // namespace igusa
