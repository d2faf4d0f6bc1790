#include "support.hpp"

#include "solcm/error.hpp"
#include "solcm/int_matrix.hpp"

#include <doctest.h>

using namespace solcm;

namespace {

// Determinant by Gaussian elimination over Q; independent of the library's
// Bareiss routine.
Integer rational_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = a(i, j);
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k)
        m[r][k] -= f * m[c][k];
    }
  }
  return det.get_num();
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors as quotients of determinantal divisors (gcd of k x k
// minors).
std::vector<Integer> determinantal_factors(const IntMatrix& a) {
  std::vector<Integer> out;
  Integer previous = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            minor(i, j) = a(r[i], c[j]);
        g = gcd(g, rational_det(minor));
      }
    if (g == 0) {
      for (; k <= std::min(a.rows(), a.cols()); ++k)
        out.push_back(0);
      break;
    }
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

} // namespace

TEST_CASE("smith normal form: fixed cases") {
  SUBCASE("identity") {
    SmithForm s = smith_normal_form(IntMatrix::identity(2));
    CHECK(s.D == IntMatrix::identity(2));
    CHECK(s.U == IntMatrix::identity(2));
    CHECK(s.V == IntMatrix::identity(2));
  }
  SUBCASE("rank one") {
    const IntMatrix a = IntMatrix::from_rows({{2, 4}, {4, 8}});
    SmithForm s = smith_normal_form(a);
    CHECK(s.D == IntMatrix::from_rows({{2, 0}, {0, 0}}));
    CHECK(s.U * a * s.V == s.D);
    CHECK(s.rank == 1);
  }
  SUBCASE("zero") {
    const IntMatrix z(3, 2);
    SmithForm s = smith_normal_form(z);
    CHECK(s.D == z);
    CHECK(s.rank == 0);
  }
  SUBCASE("empty shapes") {
    SmithForm s = smith_normal_form(IntMatrix(0, 3));
    CHECK(s.D.rows() == 0);
    CHECK(s.V == IntMatrix::identity(3));
  }
}

TEST_CASE("smith normal form: random property suite") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = testing::uniform(rng, 1, 6);
    const std::size_t c = testing::uniform(rng, 1, 6);
    const IntMatrix a = testing::random_matrix(rng, r, c, -20, 20);
    const SmithForm s = smith_normal_form(a);
    CAPTURE(a.to_string());
    REQUIRE(s.U * a * s.V == s.D);
    CHECK(abs(rational_det(s.U)) == 1);
    CHECK(abs(rational_det(s.V)) == 1);
    CHECK(s.D.is_diagonal());
    const auto d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (i + 1 < d.size() && d[i] != 0)
        CHECK(d[i + 1] % d[i] == 0);
      if (d[i] == 0 && i + 1 < d.size())
        CHECK(d[i + 1] == 0);
    }
    // Invariance under unimodular sandwiching.
    const IntMatrix p = testing::random_unimodular(rng, r);
    const IntMatrix q = testing::random_unimodular(rng, c);
    CHECK(smith_normal_form(p * a * q).D == s.D);
  }
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = testing::uniform(rng, 1, 4);
    const std::size_t c = testing::uniform(rng, 1, 4);
    const IntMatrix a = testing::random_matrix(rng, r, c, -6, 6);
    CAPTURE(a.to_string());
    CHECK(smith_normal_form(a).diagonal() == determinantal_factors(a));
  }
}

TEST_CASE("determinant and field ranks") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = testing::uniform(rng, 1, 5);
    const IntMatrix a = testing::random_matrix(rng, n, n, -9, 9);
    CHECK(determinant(a) == rational_det(a));
    const std::size_t rank = smith_normal_form(a).rank;
    CHECK(rank_over_rationals(a) == rank);
    // Rank mod p drops exactly by the number of invariant factors p divides.
    for (long p : {2, 3, 5}) {
      std::size_t divisible = 0;
      for (const Integer& d : smith_normal_form(a).diagonal())
        if (d != 0 && d % p == 0)
          ++divisible;
      CHECK(rank_mod_p(a, p) == rank - divisible);
    }
  }
}

TEST_CASE("integer kernel and solving") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a =
        testing::random_matrix(rng, testing::uniform(rng, 1, 4), testing::uniform(rng, 1, 5), -5, 5);
    const IntMatrix k = integer_kernel(a);
    CHECK(k.cols() == a.cols() - smith_normal_form(a).rank);
    CHECK((a * k).is_zero());
    // b built from a known solution is solvable, and the solution works.
    const IntMatrix x = testing::random_matrix(rng, a.cols(), 1, -4, 4);
    const IntMatrix b = a * x;
    auto y = solve_integer(a, b);
    REQUIRE(y);
    CHECK(a * *y == b);
    CHECK(in_column_span(a, b));
  }
  CHECK_FALSE(solve_integer(IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{1}})));
}

TEST_CASE("matrix shape errors") {
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), InvalidArgument);
  CHECK_THROWS(IntMatrix::identity(2) * IntMatrix::identity(3));
  CHECK_THROWS(IntMatrix::identity(2).at(2, 0));
}
