// Randomized property suites for normalization, shared by the unit tests and
// the acceptance runner. Each returns the number of failing cases.
#ifndef GAMETOPO_TESTS_PROPERTIES_H_
#define GAMETOPO_TESTS_PROPERTIES_H_

#include <cmath>
#include <random>

#include "gametopo/normalization.h"

namespace gametopo::properties {

// Mostly continuous payoffs, with a share of games drawing from a small grid
// so exact ties appear regularly.
inline RealGame RandomGame(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> value(-100.0, 100.0);
  std::uniform_int_distribution<int> grid(-3, 3);
  const bool tied = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
  RealGame g;
  for (int i = 0; i < 4; ++i) {
    g.row[i] = tied ? grid(rng) : value(rng);
    g.col[i] = tied ? grid(rng) : value(rng);
  }
  return g;
}

inline bool Near(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  for (int i = 0; i < 4; ++i) {
    if (std::abs(a[i] - b[i]) > 1e-9) return false;
  }
  return true;
}

// v -> a*v + b per player with a > 0 leaves the normalized game unchanged.
inline int AffineInvarianceFailures(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> scale(0.25, 8.0);
  std::uniform_real_distribution<double> shift(-50.0, 50.0);
  int failures = 0;
  for (int k = 0; k < cases; ++k) {
    const RealGame g = RandomGame(rng);
    RealGame h = g;
    const double ar = scale(rng), br = shift(rng);
    const double ac = scale(rng), bc = shift(rng);
    for (int i = 0; i < 4; ++i) {
      h.row[i] = ar * g.row[i] + br;
      h.col[i] = ac * g.col[i] + bc;
    }
    const NormalizedGame a = NormalizeGame(g);
    const NormalizedGame b = NormalizeGame(h);
    if (a.ordinal != b.ordinal || a.quadrant != b.quadrant ||
        !Near(a.row_unit, b.row_unit) || !Near(a.col_unit, b.col_unit)) {
      ++failures;
    }
    // Strictly increasing but non-affine maps keep the ordinal class.
    RealGame m = g;
    for (int i = 0; i < 4; ++i) {
      m.row[i] = std::cbrt(g.row[i]) * 3.0 + 1.0;
      m.col[i] = std::exp(g.col[i] / 50.0);
    }
    if (NormalizeGame(m).ordinal != a.ordinal) ++failures;
  }
  return failures;
}

// Normalizing the unit payoffs of a normalized game changes nothing.
inline int IdempotenceFailures(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int k = 0; k < cases; ++k) {
    const NormalizedGame once = NormalizeGame(RandomGame(rng));
    RealGame again;
    again.row = once.row_unit;
    again.col = once.col_unit;
    const NormalizedGame twice = NormalizeGame(again);
    if (twice.ordinal != once.ordinal || twice.quadrant != Quadrant::kNE ||
        !Near(twice.row_unit, once.row_unit) ||
        !Near(twice.col_unit, once.col_unit)) {
      ++failures;
    }
  }
  return failures;
}

// A larger tolerance only merges groups: cells tied at eps1 stay tied at
// eps2 >= eps1, and rank order never reverses.
inline int EpsilonMonotonicityFailures(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(0.0, 10.0);
  std::uniform_real_distribution<double> eps(0.0, 3.0);
  int failures = 0;
  for (int k = 0; k < cases; ++k) {
    std::array<double, 4> v{};
    for (double& x : v) x = value(rng);
    double e1 = eps(rng), e2 = eps(rng);
    if (e1 > e2) std::swap(e1, e2);
    const RankVector fine = RankWithTies(v, e1);
    const RankVector coarse = RankWithTies(v, e2);
    bool ok = coarse.distinct() <= fine.distinct();
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (fine.at(i) == fine.at(j) && coarse.at(i) != coarse.at(j)) ok = false;
        if (fine.at(i) < fine.at(j) && coarse.at(i) > coarse.at(j)) ok = false;
      }
    }
    // eps = 0 is strict exactly when the values are distinct.
    const RankVector exact = RankWithTies(v, 0.0);
    const bool distinct = v[0] != v[1] && v[0] != v[2] && v[0] != v[3] &&
                          v[1] != v[2] && v[1] != v[3] && v[2] != v[3];
    if (exact.strict() != distinct) ok = false;
    if (!ok) ++failures;
  }
  return failures;
}

}  // namespace gametopo::properties

#endif  // GAMETOPO_TESTS_PROPERTIES_H_
