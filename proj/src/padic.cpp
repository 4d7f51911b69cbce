#include "igusa/padic.hpp"

#include <string>

#include "igusa/errors.hpp"

namespace igusa {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ResidueParams::ResidueParams(long p, int f) : p_(p), f_(f), q_(1) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (f < 1) throw DomainError("extension degree f must be >= 1");
  for (int i = 0; i < f; ++i) {
    if (q_ > (1L << 40) / p) throw DomainError("q = p^f too large");
    q_ *= p;
  }
}

namespace {

long count_factor(Integer v, long p) {
  long e = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    ++e;
  }
  return e;
}

}  // namespace

Valuation padic_valuation(const Rational& x, long p) {
  if (x == 0) return std::nullopt;
  return count_factor(x.get_num(), p) - count_factor(x.get_den(), p);
}

}  // namespace igusa
