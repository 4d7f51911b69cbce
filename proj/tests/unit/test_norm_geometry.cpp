#include "doctest.h"

#include "generators.hpp"
#include "igusa/errors.hpp"
#include "igusa/norm_geometry.hpp"

using namespace igusa;

namespace {

const ZetaVariable t1{1};

ZetaRational tinv() { return ZetaRational::monomial(1, -1); }

PointWithValuations pt(std::vector<Rational> y, long p) { return PointWithValuations::from(std::move(y), p); }

MeasureCell cell(std::string label, std::vector<Rational> g, Rational nu, std::optional<long> j) {
  return {std::move(label), std::move(g), nu, j, std::nullopt};
}

}  // namespace

TEST_CASE("b factor") {
  const ResidueParams p3(3);
  CHECK(b_factor(p3) == ZetaRational(t1, Poly{2}, Poly{3, -1}));
  CHECK(b_factor(p3).evaluate(0) == Rational(2, 3));
  CHECK(b_factor(p3).evaluate(1) == 1);
}

TEST_CASE("B and its cut-off") {
  const ResidueParams p(5);
  const ZetaRational b = b_factor(p);
  CHECK(B_value(pt({0, 0}, 5), p) == ZetaRational::constant(1));
  CHECK(B_value(pt({5, 10}, 5), p) == ZetaRational::constant(1));
  CHECK(B_value(pt({5, 3}, 5), p) == b);
  CHECK(B_value(pt({Rational(1, 25), 1}, 5), p) == b * ZetaRational::monomial(1, -2));
  CHECK(B0_value(pt({5, 0}, 5), p) == tinv() - ZetaRational::constant(1));
  CHECK(B0_value(pt({1, 0}, 5), p) == tinv() - b);
  CHECK(B0_value(pt({Rational(1, 5), 0}, 5), p).is_zero());
  CHECK(B0_value(pt({Rational(2, 125), 1}, 5), p).is_zero());
}

TEST_CASE("points with valuations") {
  PointWithValuations y = pt({12, Rational(5, 9)}, 3);
  CHECK(y.valuations[0] == 1);
  CHECK(y.valuations[1] == -2);
  CHECK(y.min_valuation() == -2);
  CHECK_NOTHROW(y.validate(3));
  y.valuations[0] = 0;
  CHECK_THROWS_AS(y.validate(3), SchemaError);
  CHECK_FALSE(pt({0}, 2).min_valuation().has_value());
}

TEST_CASE("indicator reconstruction") {
  CHECK(indicator_reconstruct({0}, ResidueParams(2)) == ZetaRational::constant(1));
  CHECK(indicator_reconstruct({Rational(7, 3), 4}, ResidueParams(5)) == ZetaRational::constant(1));
  CHECK(indicator_reconstruct({Rational(1, 3), 0}, ResidueParams(3)).is_zero());
  CHECK(indicator_reconstruct({1, Rational(1, 4)}, ResidueParams(2)).is_zero());
  CHECK_THROWS_AS(indicator_reconstruct({0}, ResidueParams(2, 2)), DomainError);
  CHECK(ball_indicator({Rational(9), 1}, {0, 1}, 2, ResidueParams(3)) == 1);
  CHECK(ball_indicator({Rational(3), 1}, {0, 1}, 2, ResidueParams(3)) == 0);
}

TEST_CASE("functional pair") {
  CellMeasureModel m;
  m.params = ResidueParams(3);
  m.N = 1;
  m.cells = {cell("a", {0}, Rational(1, 2), 0), cell("b", {1}, Rational(1, 3), 1), cell("c", {2}, Rational(1, 6), 2)};
  const NormExponent e{1, 2};  // 1 - r s = -1
  const auto one = [](const std::vector<Rational>&) { return Rational(1); };
  CellMeasureModel flat = m;
  for (auto& c : flat.cells) c.j = 0;
  const FunctionalValues all = functional_pair(flat, one, e);
  CHECK(*all.ix == 1);
  CHECK(all.iy == 1);
  for (std::size_t c = 0; c < m.cells.size(); ++c) {
    const auto h = [&](const std::vector<Rational>& x) { return Rational(x == m.cells[c].g ? 1 : 0); };
    const FunctionalValues fv = functional_pair(m, h, e);
    CHECK(fv.iy == m.cells[c].nu);
    CHECK(*fv.ix / fv.iy == q_pow(3, *m.cells[c].j));  // J^-1
  }
  CHECK_THROWS_AS(jacobian_power(1, {1, Rational(1, 2)}, 3), DomainError);
  CHECK(jacobian_power(2, {1, Rational(1, 2)}, 3) == Rational(1, 3));
}

TEST_CASE("jacobian recovery") {
  CellMeasureModel m;
  m.params = ResidueParams(3);
  m.N = 2;
  m.cells = {cell("a", {0, 0}, Rational(1, 3), 0), cell("b", {3, 0}, Rational(1, 9), 1),
             cell("c", {Rational(1, 3), 1}, Rational(2, 9), 2)};
  const auto js = recover_jacobian(m, {1, 2});
  REQUIRE(js.size() == 3);
  for (std::size_t c = 0; c < 3; ++c) {
    CHECK(js[c].j == m.cells[c].j);
    CHECK(js[c].value == q_pow(3, -*m.cells[c].j));
  }
  CHECK_THROWS_AS(recover_jacobian(m, {1, 1}), DomainError);
  CHECK_THROWS_AS(recover_jacobian(m, {2, Rational(1, 2)}), DomainError);

  // exceptional cells
  m.cells[1].j.reset();
  CHECK_FALSE(recover_jacobian(m, {1, 2})[1].j.has_value());
  CHECK_FALSE(recover_jacobian(m, {1, 0})[1].j.has_value());
  CHECK(recover_jacobian(m, {1, 0})[2].j == 2);

  m.cells[2].g = m.cells[0].g;
  CHECK_THROWS_AS(recover_jacobian(m, {1, 2}), DomainError);
}

TEST_CASE("jacobian recovery on random planted models") {
  std::mt19937 rng(99);
  for (int i = 0; i < 15; ++i) {
    const long p = i % 2 ? 3 : 2;
    const CellMeasureModel m = testing::random_measure_model(rng, p, 1 + i % 2, 4, 6);
    for (const NormExponent e : {NormExponent{1, 2}, NormExponent{2, 1}, NormExponent{1, 0}, NormExponent{1, 3}}) {
      const auto js = recover_jacobian(m, e);
      for (std::size_t c = 0; c < m.cells.size(); ++c) CHECK(js[c].j == m.cells[c].j);
    }
  }
}

TEST_CASE("multiplicity recovery") {
  const Multiplicity a = recover_multiplicity({3, 5, 7, 9});
  CHECK(a.determined);
  CHECK(a.m_e == 2);
  CHECK(a.m == 1);
  const Multiplicity b = recover_multiplicity({4});
  CHECK_FALSE(b.determined);
  CHECK(b.m_e == 0);
  CHECK(b.m == 4);
  const Multiplicity c = recover_multiplicity({5, 10, 15});
  CHECK(c.m_e == 5);
  CHECK(c.m == 0);
  CHECK(recover_multiplicity({4, 4, 4}).determined == false);
  CHECK_THROWS_AS(recover_multiplicity({}), DomainError);
}

TEST_CASE("isometry") {
  std::mt19937 rng(5);
  const CellMeasureModel a = testing::random_measure_model(rng, 3, 2, 4, 4);
  const NormExponent e{1, 2};
  const NormDataset da = build_dataset(a, e);
  CHECK(da.values.size() == 9);
  CHECK(isometry_check(da, da));

  // shift every j by one and compensate the masses
  CellMeasureModel b = a;
  for (auto& c : b.cells) {
    *c.j += 1;
    c.nu *= Rational(1, 3);
  }
  CHECK(isometry_check(da, build_dataset(b, e)));
  // same, after permuting the cells
  std::reverse(b.cells.begin(), b.cells.end());
  CHECK(isometry_check(da, build_dataset(b, e)));
  b.cells[0].j = *b.cells[0].j + 1;
  CHECK_FALSE(isometry_check(da, build_dataset(b, e)));
  CHECK_THROWS_AS(isometry_check(da, build_dataset(a, e, 2)), DomainError);

  // thread count does not change the data
  CHECK(isometry_check(build_dataset(a, e, 2, 1), build_dataset(a, e, 2, 4)));
}

TEST_CASE("coset means integrate to the functional of B") {
  std::mt19937 rng(11);
  for (long p : {2L, 3L}) {
    for (int N : {1, 2}) {
      const CellMeasureModel m = testing::random_measure_model(rng, p, N, 3, 3);
      const NormExponent e{1, 2};
      ZetaRational sum;
      const NormDataset grid = build_dataset(m, e);
      for (const auto& [lambda, value] : grid.values) {
        sum += coset_mean_norm(m, std::vector<Rational>(lambda.begin(), lambda.end()), e) * q_pow(p, -N);
      }
      CHECK(sum == functional_of_B(m, e));
    }
  }
}

TEST_CASE("two-norm reconstruction") {
  // |alpha|/dmu^r = 1: the norm is constant
  const std::vector<TwoNormCell> flat = {{"u", Rational(1, 2), Rational(1, 2)}, {"v", Rational(1, 2), Rational(1, 2)}};
  CHECK(reconstruct_total_norm(flat, 1, 3, 2, Rational(1, 7)) == 1);
  CHECK(total_norm_function(recover_exponents(flat, 1, 3, 2)).is_constant());
  // a = 2, s1 = 1, s2 = 3
  const auto cells = recover_exponents({{"c", Rational(1, 9), Rational(1, 729)}}, 1, 3, 3);
  CHECK(cells[0].a == 2);
  CHECK(cells[0].mu == 1);
  CHECK_THROWS_AS(recover_exponents({{"c", Rational(1, 9), Rational(1, 27)}}, 1, 4, 3), DomainError);
  CHECK_THROWS_AS(recover_exponents({{"c", 1, 1}}, 2, 2, 3), DomainError);
  CHECK_THROWS_AS(recover_exponents({{"c", 1, Rational(1, 2)}}, 1, 2, 3), DomainError);
}
