#include "igusa/norm_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "igusa/errors.hpp"

namespace igusa {

namespace {

void require_prime_field(const ResidueParams& params) {
  if (params.f() != 1) throw DomainError("norm geometry needs q = p (f = 1)");
}

// All vectors in {0..base-1}^n in lexicographic order.
std::vector<std::vector<long>> grid(long base, int n) {
  std::vector<std::vector<long>> out;
  std::vector<long> v(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && ++v[static_cast<std::size_t>(i)] == base) v[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return out;
}

Rational dot_plus_one(const std::vector<Rational>& lambda, const std::vector<Rational>& g) {
  Rational w = 1;
  for (std::size_t i = 0; i < g.size(); ++i) w += lambda[i] * g[i];
  return w;
}

}  // namespace

PointWithValuations PointWithValuations::from(std::vector<Rational> y, long p) {
  PointWithValuations pt;
  for (const auto& c : y) pt.valuations.push_back(padic_valuation(c, p));
  pt.y = std::move(y);
  return pt;
}

void PointWithValuations::validate(long p) const {
  if (y.size() != valuations.size()) throw SchemaError("point and valuation vectors differ in length");
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (padic_valuation(y[i], p) != valuations[i]) {
      throw SchemaError("valuation of coordinate " + std::to_string(i) + " is inconsistent");
    }
  }
}

Valuation PointWithValuations::min_valuation() const {
  Valuation best;
  for (const auto& v : valuations) {
    if (valuation_less(v, best)) best = v;
  }
  return best;
}

ZetaRational b_factor(const ResidueParams& params) {
  const long q = params.q();
  return ZetaRational(ZetaVariable{1}, Poly{q - 1}, Poly{q, -1});
}

ZetaRational B_value(const PointWithValuations& y, const ResidueParams& params) {
  const Valuation v = y.min_valuation();
  if (!v || *v >= 1) return ZetaRational::constant(1);
  return b_factor(params) * ZetaRational::monomial(1, static_cast<int>(*v));
}

ZetaRational B0_value(const PointWithValuations& y, const ResidueParams& params) {
  PointWithValuations shifted = y;
  for (auto& v : shifted.valuations) {
    if (v) *v += 1;
  }
  return ZetaRational::monomial(1, -1) * B_value(shifted, params) - B_value(y, params);
}

ZetaRational indicator_reconstruct(const std::vector<Rational>& y, const ResidueParams& params) {
  require_prime_field(params);
  const long p = params.p();
  const int n = static_cast<int>(y.size());
  ZetaRational sum;
  for (const auto& z : grid(p, n)) {
    std::vector<Rational> yz = y;
    for (std::size_t i = 0; i < yz.size(); ++i) yz[i] += z[i];
    sum += B0_value(PointWithValuations::from(std::move(yz), p), params);
  }
  const Rational qn = q_pow(params.q(), n);
  const ZetaRational c = ZetaRational::monomial(qn, -1) - ZetaRational::constant(1) - b_factor(params) * (qn - 1);
  return sum / c;
}

Rational ball_indicator(const std::vector<Rational>& x, const std::vector<Rational>& center, long delta,
                        const ResidueParams& params) {
  if (x.size() != center.size()) throw ShapeError("ball center and point differ in dimension");
  const Rational scale = q_pow(params.p(), -delta);
  std::vector<Rational> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] - center[i]) * scale;
  const ZetaRational r = indicator_reconstruct(y, params);
  if (!r.is_constant()) throw ShapeError("cut-off reconstruction is not constant: " + r.to_string());
  return r.constant_value();
}

void CellMeasureModel::validate() const {
  if (N < 1) throw SchemaError("N must be >= 1");
  std::set<std::string> labels;
  for (const auto& c : cells) {
    if (!labels.insert(c.label).second) throw SchemaError("duplicate cell label " + c.label);
    if (static_cast<int>(c.g.size()) != N) throw SchemaError("cell " + c.label + ": G has wrong dimension");
    if (c.nu < 0) throw SchemaError("cell " + c.label + ": negative mass");
    if (c.j && *c.j < 0) throw SchemaError("cell " + c.label + ": J = q^-j needs j >= 0");
  }
}

void CellMeasureModel::require_injective() const {
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      if (cells[a].g == cells[b].g) {
        throw DomainError("G collision between cells " + cells[a].label + " and " + cells[b].label);
      }
    }
  }
}

Rational jacobian_power(long j, const NormExponent& e, long q) {
  const Rational exp = -Rational(j) * e.twist();
  long k = 0;
  if (!as_long(exp, k)) {
    throw DomainError("j (1 - r s) = " + to_string(-exp) + " is not an integer; choose s or j so it is");
  }
  return q_pow(q, k);
}

Rational cell_weight(const MeasureCell& c, const NormExponent& e, long q) {
  if (c.j) return c.nu * jacobian_power(*c.j, e, q);
  if (c.nu == 0 || e.twist() > 0) return 0;
  if (e.twist() == 0) return c.nu;
  throw DivergenceError("cell " + c.label + ": J = 0 with 1 - r s < 0");
}

FunctionalValues functional_pair(const CellMeasureModel& model, const TestFunction& h, const NormExponent& e) {
  FunctionalValues out;
  out.ix = Rational(0);
  const long q = model.params.q();
  for (const auto& c : model.cells) {
    const Rational hv = h(c.g);
    if (hv == 0 || c.nu == 0) continue;
    out.iy += c.nu * hv;
    if (!c.j && e.twist() < 0) {
      out.ix.reset();
      continue;
    }
    if (out.ix) *out.ix += cell_weight(c, e, q) * hv;
  }
  return out;
}

long isolation_depth(const CellMeasureModel& model, std::size_t cell) {
  const auto& g = model.cells.at(cell).g;
  long depth = 0;
  for (std::size_t o = 0; o < model.cells.size(); ++o) {
    if (o == cell) continue;
    Valuation closest;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Valuation v = padic_valuation(g[i] - model.cells[o].g[i], model.params.p());
      if (valuation_less(v, closest)) closest = v;
    }
    if (!closest) {
      throw DomainError("G collision between cells " + model.cells[cell].label + " and " + model.cells[o].label);
    }
    depth = std::max(depth, *closest + 1);
  }
  return depth;
}

std::vector<RecoveredJacobian> recover_jacobian(const CellMeasureModel& model, const NormExponent& e) {
  if (e.twist() == 0) throw DomainError("s = 1/r: the exponent 1 - r s vanishes");
  require_prime_field(model.params);
  model.validate();
  model.require_injective();
  const long q = model.params.q();
  std::vector<RecoveredJacobian> out;
  for (std::size_t c = 0; c < model.cells.size(); ++c) {
    const auto& cell = model.cells[c];
    const long delta = isolation_depth(model, c);
    const TestFunction h = [&](const std::vector<Rational>& x) {
      return ball_indicator(x, cell.g, delta, model.params);
    };
    const FunctionalValues fv = functional_pair(model, h, e);
    if (fv.iy == 0) throw DomainError("cell " + cell.label + " has zero mass; J cannot be recovered");
    RecoveredJacobian rj{cell.label, std::nullopt, 0};
    if (!fv.ix || *fv.ix == 0) {
      out.push_back(rj);
      continue;
    }
    long k = 0;
    if (!log_q_exact(*fv.ix / fv.iy, q, k)) {
      throw ShapeError("cell " + cell.label + ": I_X / I_Y is not a power of q");
    }
    long j = 0;
    if (!as_long(Rational(-k) / e.twist(), j)) {
      throw ShapeError("cell " + cell.label + ": recovered exponent is not an integer");
    }
    rj.j = j;
    rj.value = q_pow(q, -j);
    out.push_back(rj);
  }
  return out;
}

Multiplicity recover_multiplicity(const std::vector<long>& j_values) {
  if (j_values.empty()) throw DomainError("no samples for multiplicity recovery");
  long g = 0;
  for (long v : j_values) g = std::gcd(g, v - j_values.front());
  Multiplicity out;
  if (g == 0) {
    out.m = j_values.front();
    return out;
  }
  out.m_e = g;
  out.m = ((j_values.front() % g) + g) % g;
  out.determined = true;
  return out;
}

ZetaRational pointwise_norm(const CellMeasureModel& model, const std::vector<Rational>& lambda,
                            const NormExponent& e) {
  ZetaRational acc;
  const long q = model.params.q();
  for (const auto& c : model.cells) {
    const Rational w = dot_plus_one(lambda, c.g);
    if (w == 0) continue;
    const Valuation v = padic_valuation(w, model.params.p());
    acc += ZetaRational::monomial(cell_weight(c, e, q), static_cast<int>(*v));
  }
  return acc;
}

NormDataset build_dataset(const CellMeasureModel& model, const NormExponent& e, int depth, unsigned threads) {
  require_prime_field(model.params);
  model.validate();
  if (depth < 1) throw DomainError("grid depth must be >= 1");
  const long side = q_pow(model.params.p(), depth).get_num().get_si();
  const auto points = grid(side, model.N);
  std::vector<ZetaRational> values(points.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, points.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < points.size(); i += threads) {
          std::vector<Rational> lambda(points[i].begin(), points[i].end());
          values[i] = pointwise_norm(model, lambda, e);
        }
      });
    }
  }
  NormDataset ds{model.params, model.N, depth, {}};
  for (std::size_t i = 0; i < points.size(); ++i) ds.values.emplace(points[i], values[i]);
  return ds;
}

bool isometry_check(const NormDataset& a, const NormDataset& b) {
  if (!(a.params == b.params) || a.N != b.N || a.depth != b.depth || a.values.size() != b.values.size()) {
    throw DomainError("norm datasets are on different grids");
  }
  bool equal = true;
  for (const auto& [lambda, value] : a.values) {
    auto it = b.values.find(lambda);
    if (it == b.values.end()) throw DomainError("norm datasets are on different grids");
    if (!(it->second == value)) equal = false;
  }
  return equal;
}

ZetaRational coset_mean_norm(const CellMeasureModel& model, const std::vector<Rational>& lambda_bar,
                             const NormExponent& e) {
  const long p = model.params.p();
  const long q = model.params.q();
  ZetaRational acc;
  for (const auto& c : model.cells) {
    const Rational weight = cell_weight(c, e, q);
    if (weight == 0) continue;
    const Rational w = dot_plus_one(lambda_bar, c.g);
    if (w != 0) {
      // |w|^s B(pi G / w)
      std::vector<Rational> y(c.g.size());
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = c.g[i] * p / w;
      const Valuation vw = padic_valuation(w, p);
      acc += ZetaRational::monomial(weight, static_cast<int>(*vw)) * B_value(PointWithValuations::from(y, p), model.params);
    } else {
      // integral of |pi mu . G|^s over mu in O^N
      const Valuation v = PointWithValuations::from(c.g, p).min_valuation();
      acc += b_factor(model.params) * ZetaRational::monomial(weight, static_cast<int>(*v + 1));
    }
  }
  return acc;
}

ZetaRational functional_of_B(const CellMeasureModel& model, const NormExponent& e) {
  ZetaRational acc;
  const long q = model.params.q();
  for (const auto& c : model.cells) {
    acc += B_value(PointWithValuations::from(c.g, model.params.p()), model.params) * cell_weight(c, e, q);
  }
  return acc;
}

std::vector<RecoveredCell> recover_exponents(const std::vector<TwoNormCell>& cells, const Rational& s1,
                                             const Rational& s2, long q) {
  if (s1 == s2) throw DomainError("two distinct exponents s1 != s2 are needed");
  std::vector<RecoveredCell> out;
  for (const auto& c : cells) {
    if (c.i1 <= 0 || c.i2 <= 0) throw DomainError("cell " + c.label + ": norms must be positive");
    long k = 0;
    if (!log_q_exact(c.i2 / c.i1, q, k)) {
      throw DomainError("cell " + c.label + ": norm ratio is not a power of q");
    }
    long a = 0;
    if (!as_long(Rational(-k) / (s2 - s1), a)) {
      throw DomainError("cell " + c.label + ": recovered exponent is not an integer; inconsistent model");
    }
    out.push_back({c.label, a, c.i1 * q_pow_exact(q, Rational(a) * s1)});
  }
  return out;
}

ZetaRational total_norm_function(const std::vector<RecoveredCell>& cells) {
  ZetaRational acc;
  for (const auto& c : cells) acc += ZetaRational::monomial(c.mu, static_cast<int>(c.a));
  return acc;
}

Rational reconstruct_total_norm(const std::vector<TwoNormCell>& cells, const Rational& s1, const Rational& s2,
                                long q, const Rational& tau) {
  return total_norm_function(recover_exponents(cells, s1, s2, q)).evaluate(tau);
}

}  // namespace igusa
