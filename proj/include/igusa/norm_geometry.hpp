#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "igusa/padic.hpp"
#include "igusa/rational.hpp"
#include "igusa/zeta_rational.hpp"

namespace igusa {

// A point of K^N with its coordinate valuations.
struct PointWithValuations {
  std::vector<Rational> y;
  std::vector<Valuation> valuations;

  static PointWithValuations from(std::vector<Rational> y, long p);
  // Throws SchemaError if the valuations disagree with the coordinates.
  void validate(long p) const;
  Valuation min_valuation() const;
};

// (q - 1) / (q - t)
ZetaRational b_factor(const ResidueParams& params);

// 1 if all v(y_i) >= 1, else b * t^v_min.
ZetaRational B_value(const PointWithValuations& y, const ResidueParams& params);

// t^-1 B(pi y) - B(y)
ZetaRational B0_value(const PointWithValuations& y, const ResidueParams& params);

// c^-1 sum_z B0(y + z) over z in {0..p-1}^N, which is the indicator of O^N.
// Only q = p is supported (the representatives are integers).
ZetaRational indicator_reconstruct(const std::vector<Rational>& y, const ResidueParams& params);

// Indicator of the ball center + pi^delta O^N evaluated at x, through the
// cut-off reconstruction.
Rational ball_indicator(const std::vector<Rational>& x, const std::vector<Rational>& center, long delta,
                        const ResidueParams& params);

struct MeasureCell {
  std::string label;
  std::vector<Rational> g;
  Rational nu = 0;
  // J = q^-j; nullopt means J = 0 (exceptional locus).
  std::optional<long> j;
  std::optional<std::string> family;
};

struct CellMeasureModel {
  ResidueParams params{2};
  int N = 1;
  std::vector<MeasureCell> cells;

  // Shapes, nu >= 0, unique labels. Throws SchemaError.
  void validate() const;
  // Throws DomainError naming the first pair of cells with equal G.
  void require_injective() const;
};

// s together with r; the Jacobian enters with exponent 1 - r s.
struct NormExponent {
  long r = 1;
  Rational s = 0;

  Rational twist() const { return 1 - Rational(r) * s; }
};

// J^(1 - r s) for J = q^-j. Throws DomainError if j (1 - r s) is not an integer.
Rational jacobian_power(long j, const NormExponent& e, long q);

// nu * J^(1 - r s); zero for J = 0 when 1 - r s > 0, DivergenceError when 1 - r s < 0.
Rational cell_weight(const MeasureCell& c, const NormExponent& e, long q);

struct FunctionalValues {
  std::optional<Rational> ix;  // nullopt: diverges on an exceptional cell
  Rational iy = 0;
};

using TestFunction = std::function<Rational(const std::vector<Rational>&)>;

// (sum J^(1-rs) nu h(G), sum nu h(G)) over the cells.
FunctionalValues functional_pair(const CellMeasureModel& model, const TestFunction& h, const NormExponent& e);

// Smallest depth at which the ball around the cell's G contains no other cell's G.
long isolation_depth(const CellMeasureModel& model, std::size_t cell);

struct RecoveredJacobian {
  std::string label;
  std::optional<long> j;  // nullopt: J = 0
  Rational value = 0;
};

// J per cell from the ratio of ball functionals. Rejects s = 1/r.
std::vector<RecoveredJacobian> recover_jacobian(const CellMeasureModel& model, const NormExponent& e);

struct Multiplicity {
  long m_e = 0;  // 0 when undetermined
  long m = 0;
  bool determined = false;
};

// m_E = gcd of the differences, m the common residue in [0, m_E).
Multiplicity recover_multiplicity(const std::vector<long>& j_values);

// Norms of alpha_0 + sum lambda_i alpha_i over a grid lambda in {0..p^depth - 1}^N,
// as functions of t with the Jacobian twist fixed.
struct NormDataset {
  ResidueParams params{2};
  int N = 1;
  int depth = 1;
  std::map<std::vector<long>, ZetaRational> values;
};

// sum_c nu_c J_c^(1-rs) t^v(1 + lambda . G_c), zero terms where 1 + lambda . G_c = 0.
ZetaRational pointwise_norm(const CellMeasureModel& model, const std::vector<Rational>& lambda,
                            const NormExponent& e);

NormDataset build_dataset(const CellMeasureModel& model, const NormExponent& e, int depth = 1,
                          unsigned threads = 0);

// Exact equality on every grid point. Throws DomainError if the grids differ.
bool isometry_check(const NormDataset& a, const NormDataset& b);

// Mean of the norm over lambda_bar + pi O^N, for lambda_bar a depth-1 representative.
ZetaRational coset_mean_norm(const CellMeasureModel& model, const std::vector<Rational>& lambda_bar,
                             const NormExponent& e);

// sum_c nu_c J_c^(1-rs) B(G_c)
ZetaRational functional_of_B(const CellMeasureModel& model, const NormExponent& e);

// Per-cell data of two norms: i1 = mu q^(-a s1), i2 = mu q^(-a s2).
struct TwoNormCell {
  std::string label;
  Rational i1 = 0;
  Rational i2 = 0;
};

struct RecoveredCell {
  std::string label;
  long a = 0;
  Rational mu = 0;
};

std::vector<RecoveredCell> recover_exponents(const std::vector<TwoNormCell>& cells, const Rational& s1,
                                             const Rational& s2, long q);

// sum_c mu_c t^a_c
ZetaRational total_norm_function(const std::vector<RecoveredCell>& cells);

Rational reconstruct_total_norm(const std::vector<TwoNormCell>& cells, const Rational& s1, const Rational& s2,
                                long q, const Rational& tau);

}  // namespace igusa
