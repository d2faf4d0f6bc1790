#pragma once

// Random generators shared by the unit tests and the acceptance gate. All
// draws come from a seeded mt19937, so every run sees the same cases.

#include "solcm/abelian.hpp"
#include "solcm/complex.hpp"
#include "solcm/int_matrix.hpp"
#include "solcm/tower.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace testing {

using solcm::FgAbGroup;
using solcm::IntMatrix;
using solcm::Integer;

inline long uniform(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo,
                               long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = uniform(rng, lo, hi);
  return m;
}

/// Product of random elementary operations, determinant +-1 by construction.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 0)
    return u;
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = uniform(rng, 0, n - 1);
    const std::size_t b = uniform(rng, 0, n - 1);
    switch (uniform(rng, 0, 2)) {
    case 0:
      if (a != b)
        u.add_row_multiple(a, b, uniform(rng, -3, 3));
      break;
    case 1:
      u.swap_rows(a, b);
      break;
    default:
      u.negate_row(a);
    }
  }
  return u;
}

/// Random complex with d o d = 0 by construction: each d_{n+1} has columns
/// in the integer kernel of d_n.
inline solcm::ChainComplex random_complex(std::mt19937& rng, std::size_t max_rank = 5,
                                          long entry = 9) {
  const std::size_t size = uniform(rng, 1, 4);
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < size; ++i)
    ranks.push_back(uniform(rng, 0, max_rank));
  std::vector<IntMatrix> ds;
  for (std::size_t n = 1; n < size; ++n) {
    IntMatrix d;
    if (n == 1) {
      d = random_matrix(rng, ranks[0], ranks[1], -entry, entry);
    } else {
      const IntMatrix k = solcm::integer_kernel(ds.back());
      IntMatrix mix = random_matrix(rng, k.cols(), ranks[n], -2, 2);
      d = k.cols() == 0 ? IntMatrix(ranks[n - 1], ranks[n]) : k * mix;
    }
    ds.push_back(d);
  }
  return solcm::ChainComplex(ranks, ds);
}

/// A homomorphism Z_a -> Z_b, x -> c x (c a random multiple of b/gcd(a,b)).
inline IntMatrix random_cyclic_map(std::mt19937& rng, long a, long b) {
  const std::size_t rows = b == 1 ? 0 : 1;
  const std::size_t cols = a == 1 ? 0 : 1;
  IntMatrix m(rows, cols);
  if (rows && cols)
    m(0, 0) = (b / std::gcd(a, b)) * uniform(rng, 0, b);
  return m;
}

/// Inverse tower of cyclic groups of order <= max_order: a prefix shorter
/// than `max_prefix`, then a random endomorphism tail on the last level.
inline solcm::Tower random_cyclic_tower(std::mt19937& rng, long max_order, std::size_t max_prefix) {
  const std::size_t count = uniform(rng, 1, max_prefix);
  std::vector<long> orders;
  for (std::size_t i = 0; i < count; ++i)
    orders.push_back(uniform(rng, 1, max_order));
  std::vector<FgAbGroup> levels;
  for (long o : orders)
    levels.push_back(FgAbGroup::cyclic(o));
  std::vector<IntMatrix> bonds;
  for (std::size_t i = 0; i + 1 < count; ++i)
    bonds.push_back(random_cyclic_map(rng, orders[i + 1], orders[i]));
  IntMatrix tail = random_cyclic_map(rng, orders.back(), orders.back());
  return solcm::Tower::explicit_tower(solcm::Direction::Inverse, levels, bonds, tail);
}

} // namespace testing
