#pragma once

#include "solcm/exactseq.hpp"
#include "solcm/primes.hpp"
#include "solcm/ring.hpp"
#include "solcm/symbolic.hpp"
#include "solcm/tower.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace solcm {

/// The solenoid X in S^3 over a prime set, as the inverse limit of solid tori
/// U_1 > U_2 > ... whose bonding degrees are n(i + offset). The geometry is
/// taken from a fixed list of assumptions rather than computed.
class SolenoidModel {
public:
  explicit SolenoidModel(const PrimeSet& primes, std::size_t offset = 0);

  const PrimeSet& primes() const { return primes_; }
  const MultiplierSequence& multipliers() const { return multipliers_; }
  std::size_t offset() const { return offset_; }

  static const std::vector<std::string>& assumptions();

private:
  PrimeSet primes_;
  MultiplierSequence multipliers_;
  std::size_t offset_;
};

enum class Provenance { Computed, ModelAssumption, PaperAsserted };
std::string provenance_name(Provenance p);

/// op applied to tower, with the recorded result.
struct TowerStep {
  std::string label;
  std::string op; ///< "colim" | "lim" | "lim1"
  Tower tower;
  SymbolicGroup result;
};

/// How a cell was obtained, in replayable form: tower operations, then a
/// deduction on an exact sequence. When `value_from_tower` is set, the
/// sequence identifies the level of the final tower and the cell is that
/// tower's result; otherwise the cell is the verdict at `target`.
struct Derivation {
  std::vector<TowerStep> towers;
  std::optional<ExactSequence> sequence;
  std::vector<RuleStep> steps;
  std::size_t target = 0;
  bool value_from_tower = false;
  std::vector<std::string> notes;
};

struct TableCell {
  int degree = 0;
  SymbolicGroup value;
  Provenance provenance = Provenance::Computed;
  Derivation derivation;
};

struct SolenoidTable {
  std::string family; ///< "local" | "complement" | "pair"
  std::string title;
  CoefficientRing ring;
  std::vector<TableCell> cells;

  const TableCell& at(int degree) const;
  /// Cell values in degree order.
  std::vector<SymbolicGroup> values() const;
};

/// Verdict value of an exact-sequence term: Determined gives the group,
/// NonTrivial a "deduced-nonzero" marker, Undetermined an unknown.
SymbolicGroup verdict_value(const TermVerdict& v);

/// H^n(S^3, closure U_i; R) as i grows, 0 <= degree <= 4. Degrees 0, 1, 4
/// are zero, degree 2 is R with bonds x n(i), degree 3 is R with identity
/// bonds; each level is identified by deduction on the pair sequence.
Tower pair_tower(const SolenoidModel& m, const CoefficientRing& r, int degree);
/// The pair sequence and its deduction behind pair_tower.
Derivation pair_level(const SolenoidModel& m, const CoefficientRing& r, int degree);

/// H^n(S^3/X, {x}; R), n = 0..3, as colimits of pair_tower.
SolenoidTable local_cohomology_at_wild_point(const SolenoidModel& m, const CoefficientRing& r);
/// H^n(S^3 - X; R), n = 1..3, from 0 -> lim^1 H^{n-1} -> H^n -> lim H^n -> 0
/// over the complementary solid tori.
SolenoidTable complement_cohomology(const SolenoidModel& m, const CoefficientRing& r);
/// H^n(S^3/X, S^3 - X; R), n = 1..3, from the long exact sequence of the
/// pair, fed by the two tables above.
SolenoidTable quotient_pair_cohomology(const SolenoidModel& m, const CoefficientRing& r);

struct ClcCell {
  enum class Status { Holds, Fails, Undetermined };
  int degree = 0;
  Status status = Status::Undetermined;
  SymbolicGroup witness; ///< the group whose vanishing decides the degree
  Provenance provenance = Provenance::Computed;
  Derivation derivation;
};
std::string clc_status_name(ClcCell::Status s);

struct ClcReport {
  CoefficientRing ring;
  std::vector<ClcCell> cells; ///< degrees 0..3
  bool all_hold() const;
};

/// Cohomological local connectedness at the wild point x = X/X, degrees 0..3.
ClcReport clc_report(const SolenoidModel& m, const CoefficientRing& r);

/// Re-runs a cell's derivation; false when it does not reproduce the value.
bool replay_cell(const TableCell& c);
bool replay_clc(const ClcCell& c);

} // namespace solcm
