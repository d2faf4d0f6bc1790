// Subgroup arithmetic in presented abelian groups, reduced to integer
// kernels and span membership.

#include "solcm/abelian.hpp"
#include "solcm/error.hpp"

namespace solcm {

Presentation Presentation::of(const FgAbGroup& g) { return {g.generator_count(), g.relations()}; }

Presentation direct_sum(const Presentation& a, const Presentation& b) {
  return {a.generators + b.generators, block_diagonal(a.relations, b.relations)};
}

namespace {

void check_columns(const Presentation& g, const IntMatrix& gens, const char* what) {
  if (gens.rows() != g.generators)
    throw InvalidArgument(std::string(what) + ": generator matrix has wrong height");
}

// First k coordinates of the kernel of [A | B], where A has k columns:
// {x : A x in span B}.
IntMatrix preimage_of_span(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix ker = integer_kernel(hstack(a, b));
  return ker.block(0, 0, a.cols(), ker.cols());
}

} // namespace

bool is_homomorphism(const Presentation& source, const Presentation& target, const IntMatrix& map) {
  if (map.rows() != target.generators || map.cols() != source.generators)
    return false;
  return in_column_span(target.relations, map * source.relations);
}

IntMatrix kernel_generators(const Presentation& source, const Presentation& target,
                            const IntMatrix& map) {
  if (!is_homomorphism(source, target, map))
    throw InvalidArgument("kernel_generators: matrix does not define a homomorphism");
  return preimage_of_span(map, target.relations);
}

FgAbGroup subgroup_type(const Presentation& g, const IntMatrix& gens) {
  check_columns(g, gens, "subgroup_type");
  return group_from_relations(preimage_of_span(gens, g.relations));
}

FgAbGroup subquotient_type(const Presentation& g, const IntMatrix& big, const IntMatrix& small) {
  check_columns(g, big, "subquotient_type");
  check_columns(g, small, "subquotient_type");
  if (!subgroup_contains(g, big, small))
    throw InvalidArgument("subquotient_type: subgroup is not contained in the larger one");
  return group_from_relations(preimage_of_span(big, hstack(small, g.relations)));
}

bool subgroup_contains(const Presentation& g, const IntMatrix& big, const IntMatrix& small) {
  check_columns(g, big, "subgroup_contains");
  check_columns(g, small, "subgroup_contains");
  return in_column_span(hstack(big, g.relations), small);
}

bool same_subgroup(const Presentation& g, const IntMatrix& a, const IntMatrix& b) {
  return subgroup_contains(g, a, b) && subgroup_contains(g, b, a);
}

} // namespace solcm
