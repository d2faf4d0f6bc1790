// Hom, Ext, tensor and Tor of a finitely generated group against a
// coefficient ring, summand by summand.

#include "solcm/symbolic.hpp"

namespace solcm {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

SymbolicGroup copies(const SymbolicGroup& g, std::size_t n) {
  return SymbolicGroup::direct_sum(std::vector<SymbolicGroup>(n, g));
}

// Z_{gcd(d, m)} summed over the invariant factors d of a.
SymbolicGroup torsion_against(const FgAbGroup& a, const Integer& m) {
  std::vector<Integer> orders;
  for (const Integer& d : a.torsion())
    orders.push_back(gcd(d, m));
  return SymbolicGroup::fg(FgAbGroup::from_orders(0, orders));
}

} // namespace

SymbolicGroup tensor_with(const FgAbGroup& a, const CoefficientRing& ring) {
  switch (ring.kind()) {
  case CoefficientRing::Kind::Integers:
    return SymbolicGroup::fg(a);
  case CoefficientRing::Kind::Rationals:
    return copies(SymbolicGroup::rationals(), a.free_rank());
  case CoefficientRing::Kind::Modular:
    return SymbolicGroup::direct_sum(
        {copies(ring_group(ring), a.free_rank()), torsion_against(a, ring.modulus())});
  }
  return {};
}

SymbolicGroup tor_with(const FgAbGroup& a, const CoefficientRing& ring) {
  if (!ring.is_modular())
    return SymbolicGroup::trivial();
  return torsion_against(a, ring.modulus());
}

SymbolicGroup hom_into(const FgAbGroup& a, const CoefficientRing& ring) {
  switch (ring.kind()) {
  case CoefficientRing::Kind::Integers:
    return SymbolicGroup::fg(FgAbGroup::free(a.free_rank()));
  case CoefficientRing::Kind::Rationals:
    return copies(SymbolicGroup::rationals(), a.free_rank());
  case CoefficientRing::Kind::Modular:
    return SymbolicGroup::direct_sum(
        {copies(ring_group(ring), a.free_rank()), torsion_against(a, ring.modulus())});
  }
  return {};
}

SymbolicGroup ext_into(const FgAbGroup& a, const CoefficientRing& ring) {
  switch (ring.kind()) {
  case CoefficientRing::Kind::Integers:
    return SymbolicGroup::fg(a.torsion_subgroup());
  case CoefficientRing::Kind::Rationals:
    return SymbolicGroup::trivial();
  case CoefficientRing::Kind::Modular:
    return torsion_against(a, ring.modulus());
  }
  return {};
}

} // namespace solcm
