// Seeded generators for planted models shared by the unit and acceptance tests.
#pragma once

#include <random>

#include "igusa/norm_geometry.hpp"
#include "igusa/snc_model.hpp"

namespace igusa::testing {

inline long uniform(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// A klt model with random divisors and cells. With boundary = false all
// d_E = l_E = f_E = 0 and r_D = 1.
inline GlobalModel random_klt_model(std::mt19937& rng, bool boundary) {
  GlobalModel m;
  m.n = static_cast<int>(uniform(rng, 1, 3));
  m.r = uniform(rng, 1, 2);
  m.r_d = boundary ? static_cast<int>(uniform(rng, 1, 2)) : 1;
  if (m.r_d == 2) {
    // half-integral boundary coefficients need q to be a square
    m.params = uniform(rng, 0, 1) ? ResidueParams(2, 2) : ResidueParams(3, 2);
  } else {
    const long primes[] = {2, 3, 5};
    m.params = ResidueParams(primes[uniform(rng, 0, 2)]);
  }
  const long ndiv = uniform(rng, 1, 4);
  for (long i = 0; i < ndiv; ++i) {
    DivisorData e;
    e.label = "E" + std::to_string(i);
    e.a = uniform(rng, 0, 4);
    e.m = uniform(rng, 0, 3);
    if (boundary) {
      // klt: d < m + 1
      e.d = Rational(uniform(rng, -m.r_d, m.r_d * (e.m + 1) - 1), m.r_d);
      e.l = uniform(rng, 0, 3);
      e.f = uniform(rng, 0, 2);
    }
    m.divisors.push_back(e);
  }
  const long ncells = uniform(rng, 1, 4);
  for (long c = 0; c < ncells; ++c) {
    ModelCell cell;
    cell.depth = static_cast<int>(uniform(rng, 0, 2));
    std::vector<bool> used(static_cast<std::size_t>(ndiv), false);
    for (int i = 0; i < m.n; ++i) {
      const long pick = uniform(rng, -1, ndiv - 1);
      ModelAxis ax;
      if (pick >= 0 && !used[static_cast<std::size_t>(pick)]) {
        used[static_cast<std::size_t>(pick)] = true;
        ax.divisor = "E" + std::to_string(pick);
      }
      cell.axes.push_back(ax);
    }
    cell.unit_val_m = uniform(rng, 0, 1);
    cell.unit_val_a = m.r * cell.unit_val_m + uniform(rng, 0, 2);
    cell.copies = uniform(rng, 1, 3);
    m.cells.push_back(cell);
  }
  return m;
}

// A cell-measure model with distinct random G and planted J = q^-j.
inline CellMeasureModel random_measure_model(std::mt19937& rng, long p, int N, int ncells, long jmax) {
  CellMeasureModel m;
  m.params = ResidueParams(p);
  m.N = N;
  while (static_cast<int>(m.cells.size()) < ncells) {
    MeasureCell c;
    c.label = "c" + std::to_string(m.cells.size());
    for (int i = 0; i < N; ++i) c.g.push_back(Rational(uniform(rng, -6, 6)) * q_pow(p, uniform(rng, -1, 1)));
    bool fresh = true;
    for (const auto& o : m.cells) fresh = fresh && o.g != c.g;
    if (!fresh) continue;
    c.nu = Rational(uniform(rng, 1, 5)) * q_pow(p, -uniform(rng, 0, 2));
    c.j = uniform(rng, 0, jmax);
    m.cells.push_back(c);
  }
  return m;
}

}  // namespace igusa::testing
