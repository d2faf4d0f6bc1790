#pragma once

#include "solcm/int_matrix.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace solcm {

/// Finitely generated abelian group Z^r + Z_{d1} + ... + Z_{dk} in invariant
/// factor form: every d_i >= 2 and d1 | d2 | ... | dk. The normal form is
/// unique, so == is isomorphism.
///
/// Generator coordinates: the r free generators come first, then one
/// generator per invariant factor, in order.
class FgAbGroup {
public:
  FgAbGroup() = default;

  static FgAbGroup free(std::size_t rank);
  /// Z_n; n == 0 gives Z, n == 1 the trivial group. Negative n is rejected.
  static FgAbGroup cyclic(const Integer& n);
  /// Direct sum of Z^free_rank and cyclic groups of the given orders, in any
  /// order; orders 0 contribute free summands, orders 1 vanish.
  static FgAbGroup from_orders(std::size_t free_rank, std::span<const Integer> orders);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t generator_count() const { return free_rank_ + torsion_.size(); }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_free() const { return torsion_.empty(); }
  /// Cardinality; rejects infinite groups.
  Integer order() const;
  /// Number of invariant factors divisible by p.
  std::size_t p_rank(const Integer& p) const;
  FgAbGroup torsion_subgroup() const;

  /// generators x (number of invariant factors), relators as columns.
  IntMatrix relations() const;

  friend FgAbGroup operator+(const FgAbGroup& a, const FgAbGroup& b);
  friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) = default;

  /// "0", "Z", "Z_5", "Z^2 + Z_2 + Z_6".
  std::string to_string() const;

private:
  friend FgAbGroup group_from_relations(const IntMatrix& relators);

  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Z^rows / (column span of R).
FgAbGroup group_from_relations(const IntMatrix& relators);

struct KernelCokernel {
  FgAbGroup kernel;
  FgAbGroup cokernel;
};

/// f read as a map Z^cols -> Z^rows.
KernelCokernel kernel_cokernel(const IntMatrix& f);

/// Generators plus relators (as columns); a presentation need not be in
/// normal form, which is what direct products of towers need.
struct Presentation {
  std::size_t generators = 0;
  IntMatrix relations{0, 0};

  static Presentation of(const FgAbGroup& g);
  FgAbGroup group() const { return group_from_relations(relations); }
};

Presentation direct_sum(const Presentation& a, const Presentation& b);

// Subgroups of a presented group are given as generator columns in its
// generator coordinates.

/// Whether the matrix sends every relator of `source` into the relator
/// lattice of `target`, i.e. defines a homomorphism.
bool is_homomorphism(const Presentation& source, const Presentation& target, const IntMatrix& map);
/// Generators of the kernel of a homomorphism, in source coordinates.
IntMatrix kernel_generators(const Presentation& source, const Presentation& target,
                            const IntMatrix& map);
/// Isomorphism type of the subgroup generated by `gens`.
FgAbGroup subgroup_type(const Presentation& g, const IntMatrix& gens);
/// Isomorphism type of <big> / <small>; requires <small> inside <big>.
FgAbGroup subquotient_type(const Presentation& g, const IntMatrix& big, const IntMatrix& small);
bool subgroup_contains(const Presentation& g, const IntMatrix& big, const IntMatrix& small);
bool same_subgroup(const Presentation& g, const IntMatrix& a, const IntMatrix& b);

} // namespace solcm
