#include "igusa/rational.hpp"

#include <cctype>

#include "igusa/errors.hpp"

namespace igusa {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) throw SchemaError("malformed integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw SchemaError("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(10); }
std::string to_string(const Integer& x) { return x.get_str(10); }

Rational rational_pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    Rational inv = 1 / base;
    return rational_pow(inv, -exp);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational q_pow_exact(long q, const Rational& exp) {
  long den = exp.get_den().get_si();
  long num = exp.get_num().get_si();
  if (den == 1) return q_pow(q, num);
  Integer root;
  Integer qq(q);
  if (mpz_root(root.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(den)) == 0) {
    throw DomainError("q^(" + to_string(exp) + ") is irrational for q = " + std::to_string(q));
  }
  return rational_pow(Rational(root), num);
}

bool as_long(const Rational& x, long& out) {
  if (x.get_den() != 1 || !x.get_num().fits_slong_p()) return false;
  out = x.get_num().get_si();
  return true;
}

bool log_q_exact(const Rational& x, long q, long& k) {
  if (x <= 0 || q < 2) return false;
  Integer num = x.get_num();
  Integer den = x.get_den();
  if (num != 1 && den != 1) return false;
  Integer v = (num == 1) ? den : num;
  long e = 0;
  while (v % q == 0) {
    v /= q;
    ++e;
  }
  if (v != 1) return false;
  k = (num == 1) ? -e : e;
  return true;
}

}  // namespace igusa
