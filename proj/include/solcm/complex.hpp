#pragma once

#include "solcm/int_matrix.hpp"
#include "solcm/ring.hpp"
#include "solcm/symbolic.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace solcm {

/// Finite chain complex of free abelian groups C_0 <- C_1 <- ... <- C_top.
///
/// differential(n) : C_n -> C_{n-1} is a ranks[n-1] x ranks[n] matrix.
/// Construction checks the shapes and d_{n-1} d_n = 0.
class ChainComplex {
public:
  ChainComplex() = default;
  /// differentials[k] is d_{k+1}; there are ranks.size() - 1 of them.
  ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials);

  /// Empty complex: every group zero.
  static ChainComplex zero() { return {}; }

  /// Number of chain groups; degrees run over 0 .. size()-1.
  std::size_t size() const { return ranks_.size(); }
  std::size_t rank(int n) const;
  /// Zero matrix of the right shape outside the stored range.
  IntMatrix differential(int n) const;

private:
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> differentials_;
};

/// Degree -> group, finitely supported; absent degrees are Trivial.
class GradedGroupTable {
public:
  void set(int degree, const SymbolicGroup& g);
  SymbolicGroup at(int degree) const;
  /// Degrees holding a non-Trivial value, ascending.
  std::vector<int> support() const;
  const std::map<int, SymbolicGroup>& cells() const { return cells_; }

  friend bool operator==(const GradedGroupTable& a, const GradedGroupTable& b) = default;

  /// One "n: value" line per degree in [0, max(top, last nonzero degree)].
  std::string to_string(int top = 0) const;

private:
  std::map<int, SymbolicGroup> cells_;
};

GradedGroupTable integral_homology(const ChainComplex& c);

/// Universal-coefficient assembly H_n (x) R + Tor(H_{n-1}, R).
GradedGroupTable homology_uct(const ChainComplex& c, const CoefficientRing& ring);
/// dim H_n(C (x) F) by rank-nullity over the field F (prime Z_p or Q).
GradedGroupTable homology_field_rank(const ChainComplex& c, const CoefficientRing& field);
/// UCT value; over a field it is cross-checked against the rank route and
/// a disagreement throws InconsistencyError.
GradedGroupTable homology_with_coefficients(const ChainComplex& c, const CoefficientRing& ring);

/// Hom(H_n, R) + Ext(H_{n-1}, R).
GradedGroupTable cohomology_uct(const ChainComplex& c, const CoefficientRing& ring);
/// Rank-nullity on the dual cochain complex Hom(C, F).
GradedGroupTable cohomology_field_rank(const ChainComplex& c, const CoefficientRing& field);
GradedGroupTable cohomology_with_coefficients(const ChainComplex& c, const CoefficientRing& ring);

/// Cellular chains of the lens space L(q,1): Z in degrees 0..3 with
/// differentials 0, q, 0. q = 1 is the 3-sphere.
ChainComplex lens_complex(const Integer& q);
/// One cell in degree 0 and one in degree n.
ChainComplex sphere_complex(std::size_t n);

/// Homology of the suspension from the homology of a nonempty space, with
/// coefficients `ring`: reduce degree 0 by one copy of the ring, shift up by
/// one, and put the ring back in degree 0.
GradedGroupTable suspension_homology(const GradedGroupTable& t,
                                     const CoefficientRing& ring = CoefficientRing::integers());

} // namespace solcm
