#include "solcm/verdict.hpp"

#include "solcm/error.hpp"

namespace solcm {

std::string hm_basis_name(ClassificationVerdict::HmBasis b) {
  switch (b) {
  case ClassificationVerdict::HmBasis::CmImpliesHm:
    return "cm-implies-hm";
  case ClassificationVerdict::HmBasis::ComputedObstruction:
    return "computed-cohomological-obstruction";
  case ClassificationVerdict::HmBasis::PaperAsserted:
    return "paper-asserted";
  }
  return {};
}

namespace {

std::string cell_text(const char* family, int degree, const SymbolicGroup& g) {
  return std::string(family) + " H^" + std::to_string(degree) + " = " + g.to_string();
}

ConditionCheck local_condition(const SolenoidTable& local, const SymbolicGroup& R) {
  ConditionCheck c;
  for (const TableCell& cell : local.cells) {
    const SymbolicGroup expected = cell.degree == 3 ? R : SymbolicGroup::trivial();
    if (!(cell.value == expected))
      c.failures.push_back(cell_text("local", cell.degree, cell.value));
  }
  c.holds = c.failures.empty();
  return c;
}

// The two presentations of the local pair must agree: the pair table is
// (0, 0, R) exactly when the local table is (0, 0, 0, R).
void cross_check(const ConditionCheck& local, const SolenoidTable& pair, const SymbolicGroup& R) {
  bool pair_matches = true;
  for (const TableCell& cell : pair.cells)
    if (!(cell.value == (cell.degree == 3 ? R : SymbolicGroup::trivial())))
      pair_matches = false;
  if (local.holds && !pair_matches)
    throw InconsistencyError("local cohomology at x is (0,0,0,R) but the pair table is not (0,0,R)");
  if (!local.holds && pair_matches)
    throw InconsistencyError("pair table is (0,0,R) but local cohomology at x is not (0,0,0,R)");
}

} // namespace

ClassificationVerdict classify(const PrimeSet& primes, const CoefficientRing& ring,
                               std::size_t offset) {
  const SolenoidModel model(primes, offset);
  const SymbolicGroup R = ring_group(ring);
  ClassificationVerdict v{primes,
                          ring,
                          {},
                          {},
                          {},
                          false,
                          {},
                          false,
                          ClassificationVerdict::HmBasis::CmImpliesHm,
                          Provenance::Computed,
                          false,
                          local_cohomology_at_wild_point(model, ring),
                          complement_cohomology(model, ring),
                          quotient_pair_cohomology(model, ring),
                          clc_report(model, ring)};

  v.cond1.holds = true;
  v.cond1.provenance = Provenance::ModelAssumption;

  for (const ClcCell& c : v.clc.cells)
    if (c.status != ClcCell::Status::Holds)
      v.cond2.failures.push_back("clc degree " + std::to_string(c.degree) + " " +
                                 clc_status_name(c.status));
  v.cond2.holds = v.cond2.failures.empty();

  v.cond3 = local_condition(v.local, R);
  cross_check(v.cond3, v.pair, R);
  for (const TableCell& cell : v.pair.cells)
    if (cell.value.is_nontrivial() && cell.degree != 3)
      v.cond3.failures.push_back(cell_text("pair", cell.degree, cell.value));

  v.cm3 = v.cond1.holds && v.cond2.holds && v.cond3.holds;
  if (!v.cm3) {
    v.cm3_reasons = v.cond2.failures;
    v.cm3_reasons.insert(v.cm3_reasons.end(), v.cond3.failures.begin(), v.cond3.failures.end());
  }

  if (v.cm3) {
    v.hm3 = true;
    v.hm3_basis = ClassificationVerdict::HmBasis::CmImpliesHm;
    v.hm3_provenance = Provenance::Computed;
  } else {
    v.hm3 = false;
    v.hm3_basis = v.local.at(2).value.is_nontrivial()
                      ? ClassificationVerdict::HmBasis::ComputedObstruction
                      : ClassificationVerdict::HmBasis::PaperAsserted;
    v.hm3_provenance = Provenance::PaperAsserted;
  }

  if (ring.is_modular() && !ring.is_prime_field()) {
    v.beyond_paper = true;
    const bool by_factoring = model.multipliers().strip_support(ring.modulus()) == 1;
    if (by_factoring != v.cm3)
      throw InconsistencyError("composite modulus " + ring.to_string() +
                               ": verdict disagrees with the prime-factor rule");
  }
  return v;
}

} // namespace solcm
