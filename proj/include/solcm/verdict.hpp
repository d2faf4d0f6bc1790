#pragma once

#include "solcm/solenoid.hpp"

#include <string>
#include <vector>

namespace solcm {

struct ConditionCheck {
  bool holds = false;
  Provenance provenance = Provenance::Computed;
  /// Concrete failing cells, e.g. "local H^2 = Z_5"; empty when holds.
  std::vector<std::string> failures;
};

/// Cohomology-manifold classification of S3/X over one coefficient ring.
struct ClassificationVerdict {
  enum class HmBasis { CmImpliesHm, ComputedObstruction, PaperAsserted };

  PrimeSet primes;
  CoefficientRing ring;

  ConditionCheck cond1; ///< dimension, compactness, metrizability: asserted
  ConditionCheck cond2; ///< clc at the wild point
  ConditionCheck cond3; ///< local cohomology at the wild point
  bool cm3 = false;
  std::vector<std::string> cm3_reasons;

  bool hm3 = false;
  HmBasis hm3_basis = HmBasis::CmImpliesHm;
  /// Holds: derived from cm => hm. Fails: the negative is taken as asserted,
  /// the computed obstruction is cohomological.
  Provenance hm3_provenance = Provenance::Computed;

  /// Composite modulus: outside the prime cases, classified by factoring.
  bool beyond_paper = false;

  SolenoidTable local;
  SolenoidTable complement;
  SolenoidTable pair;
  ClcReport clc;
};

std::string hm_basis_name(ClassificationVerdict::HmBasis b);

/// Cross-checks the local table against the pair table (and composite
/// moduli against factoring); a disagreement throws InconsistencyError.
ClassificationVerdict classify(const PrimeSet& primes, const CoefficientRing& ring,
                               std::size_t offset = 0);

} // namespace solcm
