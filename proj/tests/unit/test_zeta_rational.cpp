#include "doctest.h"

#include "igusa/errors.hpp"
#include "igusa/zeta_rational.hpp"

using namespace igusa;

namespace {

const ZetaVariable t1{1};

ZetaRational frac(Poly num, Poly den, int e = 0) { return ZetaRational(t1, num, den, e); }

// Power series of num/den at 0 by schoolbook division (den(0) != 0).
std::vector<Rational> divide_series(const Poly& num, const Poly& den, int k) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    Rational acc = num.coeff(j);
    for (int i = 1; i <= j; ++i) acc -= den.coeff(i) * c[static_cast<std::size_t>(j - i)];
    c[static_cast<std::size_t>(j)] = acc / den.coeff(0);
  }
  return c;
}

}  // namespace

TEST_CASE("normalization") {
  CHECK(frac(Poly{0, -2, 2}, Poly{0, -1, 1}) == ZetaRational::constant(2));
  const ZetaRational b = frac(Poly{2}, Poly{3, -1});
  CHECK(b.numerator() == Poly{2});
  CHECK(b.denominator() == Poly{3, -1});
  const ZetaRational s = frac(Poly{-1}, Poly{-3, 1});
  CHECK(s.numerator() == Poly{1});
  CHECK(s.denominator() == Poly{3, -1});
  // pole factors are split off and cancelled against the numerator
  const ZetaRational p = frac(Poly{0, 0, 1}, Poly{0, 0, 0, 2, 1});
  CHECK(p.pole_order() == 1);
  CHECK(p.denominator() == Poly{2, 1});
  // rational coefficients are cleared
  const ZetaRational r = frac(Poly::constant(Rational(1, 2)), Poly::constant(Rational(3, 4)));
  CHECK(r.numerator() == Poly{2});
  CHECK(r.denominator() == Poly{3});
  CHECK_THROWS_AS(frac(Poly{1}, Poly{}), DomainError);
}

TEST_CASE("arithmetic and evaluation") {
  const ZetaRational b = frac(Poly{2}, Poly{3, -1});
  CHECK(b + b == frac(Poly{4}, Poly{3, -1}));
  CHECK(b - b == ZetaRational());
  CHECK(b / b == ZetaRational::constant(1));
  CHECK(b.evaluate(1) == 1);
  CHECK(b.evaluate(0) == Rational(2, 3));
  CHECK_THROWS_AS(b.evaluate(3), DivergenceError);
  const ZetaRational inv = ZetaRational::monomial(1, -2);
  CHECK(inv.pole_order() == 2);
  CHECK(inv.evaluate(Rational(1, 2)) == 4);
  CHECK_THROWS_AS(inv.evaluate(0), DivergenceError);
  CHECK(ZetaRational::monomial(5, 3).evaluate(2) == 40);
}

TEST_CASE("mixed scales") {
  // t = tau^2
  const ZetaRational x = ZetaRational(ZetaVariable{1}, Poly{0, 1}, Poly{1});
  const ZetaRational y = ZetaRational(ZetaVariable{2}, Poly{0, 1}, Poly{1});
  const ZetaRational sum = x + y;
  CHECK(sum.variable().scale() == 2);
  CHECK(sum.numerator() == Poly{0, 1, 1});
  CHECK_THROWS_AS(ZetaRational(ZetaVariable{2}, Poly{1}, Poly{1}) + ZetaRational(ZetaVariable{3}, Poly{1}, Poly{1}),
                  DomainError);
  CHECK(x.rescaled(3).numerator() == Poly{0, 0, 0, 1});
}

TEST_CASE("rendering") {
  const ZetaRational b = frac(Poly{2}, Poly{3, -1});
  CHECK(b.to_latex() == "\\frac{2}{3 - t}");
  CHECK(ZetaRational(ZetaVariable{2}, Poly{1}, Poly{1, 1}).to_latex() == "\\frac{1}{1 + t_D}");
  CHECK(ZetaRational::constant(Rational(-1, 2)).to_latex() == "\\frac{-1}{2}");
}

TEST_CASE("taylor expansion") {
  const ZetaRational b = frac(Poly{2}, Poly{3, -1});
  const TruncatedSeries s = rf_taylor(b, 2);
  CHECK(s.lowest() == 0);
  CHECK(s.coeffs() == std::vector<Rational>{Rational(2, 3), Rational(2, 9), Rational(2, 27)});

  const TruncatedSeries one = rf_taylor(ZetaRational::constant(1), 5);
  CHECK(one.coeff(0) == 1);
  for (int j = 1; j <= 5; ++j) CHECK(one.coeff(j) == 0);

  const TruncatedSeries shifted = rf_taylor(frac(Poly{0, 2}, Poly{9, -3}), 2);
  CHECK(shifted.coeff(0) == 0);
  CHECK(shifted.coeff(1) == Rational(2, 9));
  CHECK(shifted.coeff(2) == Rational(2, 27));

  // Laurent part
  const TruncatedSeries laurent = rf_taylor(ZetaRational::monomial(1, -1) - ZetaRational::constant(1), 1);
  CHECK(laurent.lowest() == -1);
  CHECK(laurent.coeff(-1) == 1);
  CHECK(laurent.coeff(0) == -1);
  CHECK(laurent.coeff(1) == 0);
}

TEST_CASE("taylor agrees with long division, normalized or not") {
  const std::vector<std::pair<Poly, Poly>> cases = {
      {Poly{32, -8, 8, 0, 0, -1}, Poly{64, -32, 0, 0, 0, 0, -2, 1}},
      {Poly{4}, Poly{25, -10, 1}},
      {Poly{1, 1, 1}, Poly{7, 0, -3, 5}},
      {Poly{2, 2}, Poly{6, 8, 2}},  // shares the factor 1 + t
  };
  for (const auto& [num, den] : cases) {
    const ZetaRational z = frac(num, den);
    const auto expected = divide_series(num, den, 12);
    const TruncatedSeries got = rf_taylor(z, 12);
    for (int j = 0; j <= 12; ++j) CHECK(got.coeff(j) == expected[static_cast<std::size_t>(j)]);
    // series * den reproduces num up to the order
    for (int j = 0; j <= 12; ++j) {
      Rational acc = 0;
      for (int i = 0; i <= j; ++i) acc += got.coeff(i) * z.denominator().coeff(j - i);
      CHECK(acc == z.numerator().coeff(j));
    }
  }
}

TEST_CASE("series matching") {
  const ZetaRational b = frac(Poly{2}, Poly{3, -1});
  const ZetaRational b2 = frac(Poly{2}, Poly{3, 0, -1});
  CHECK(series_match(rf_taylor(b, 6), rf_taylor(b, 6), 6));
  CHECK_FALSE(series_match(rf_taylor(b, 1), rf_taylor(b2, 1), 1));
  CHECK(series_match(rf_taylor(b, 6), rf_taylor(b, 6).truncated(3), 3));
  CHECK_THROWS_AS(series_match(rf_taylor(b, 6), rf_taylor(b, 6).truncated(3), 4), DomainError);
  const TruncatedSeries other(ZetaVariable{2}, 0, {Rational(2, 3)});
  CHECK_THROWS_AS(series_match(rf_taylor(b, 0), other, 0), DomainError);
  CHECK(rf_taylor(b, 4).partial_sum(1) == Rational(2, 3) + Rational(2, 9) + Rational(2, 27) + Rational(2, 81) +
                                              Rational(2, 243));
}
