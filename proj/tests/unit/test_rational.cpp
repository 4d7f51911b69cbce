#include "doctest.h"

#include "igusa/errors.hpp"
#include "igusa/padic.hpp"
#include "igusa/polynomial.hpp"
#include "igusa/rational.hpp"

using namespace igusa;

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(Rational(-5)) == "-5");
  CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
  CHECK_THROWS_AS(parse_rational("x"), SchemaError);
  CHECK_THROWS_AS(parse_rational(""), SchemaError);
}

TEST_CASE("powers of q") {
  CHECK(q_pow(3, -2) == Rational(1, 9));
  CHECK(q_pow(2, 10) == 1024);
  CHECK(q_pow_exact(9, Rational(1, 2)) == 3);
  CHECK(q_pow_exact(4, Rational(-3, 2)) == Rational(1, 8));
  CHECK_THROWS_AS(q_pow_exact(2, Rational(1, 2)), DomainError);

  long k = 0;
  CHECK(log_q_exact(Rational(1, 27), 3, k));
  CHECK(k == -3);
  CHECK(log_q_exact(Rational(1), 5, k));
  CHECK(k == 0);
  CHECK_FALSE(log_q_exact(Rational(2, 9), 3, k));
  CHECK_FALSE(log_q_exact(Rational(-9), 3, k));
}

TEST_CASE("p-adic valuation") {
  CHECK(padic_valuation(12, 2) == 2);
  CHECK(padic_valuation(Rational(5, 9), 3) == -2);
  CHECK(padic_valuation(1, 7) == 0);
  CHECK_FALSE(padic_valuation(0, 5).has_value());
  // v(xy) = v(x) + v(y)
  for (long a = -20; a <= 20; ++a) {
    for (long b = 1; b <= 20; ++b) {
      if (a == 0) continue;
      const Rational x(a, b);
      const Rational y(b * 3, a * a);
      for (long p : {2L, 3L, 5L}) {
        CHECK(*padic_valuation(x * y, p) == *padic_valuation(x, p) + *padic_valuation(y, p));
      }
    }
  }
}

TEST_CASE("residue field parameters") {
  const ResidueParams r(3, 2);
  CHECK(r.q() == 9);
  CHECK_THROWS_AS(ResidueParams(4), DomainError);
  CHECK_THROWS_AS(ResidueParams(3, 0), DomainError);
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("univariate polynomials") {
  const Poly a{-1, 0, 1};  // t^2 - 1
  const Poly b{-1, 1};     // t - 1
  auto [quot, rem] = Poly::divmod(a, b);
  CHECK(quot == Poly{1, 1});
  CHECK(rem.is_zero());
  CHECK(Poly::gcd(a, Poly{1, 2, 1}) == Poly{1, 1});
  CHECK(Poly::gcd(Poly{2}, Poly{0, 1}) == Poly{1});
  CHECK(a.eval(3) == 8);
  CHECK(a.compose_power(2) == Poly{-1, 0, 0, 0, 1});
  CHECK(Poly{0, 0, 3}.low_degree() == 2);
  CHECK(Poly{0, 0, 3}.shift_down(2) == Poly{3});
  CHECK(Poly{1, 2, 3}.derivative() == Poly{2, 6});
  CHECK(Poly{3, -1}.to_string() == "3 - t");
  CHECK(Poly{}.degree() == -1);
  CHECK_THROWS_AS(Poly::divmod(a, Poly{}), DomainError);
}
