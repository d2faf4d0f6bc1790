#pragma once

#include "solcm/abelian.hpp"
#include "solcm/primes.hpp"
#include "solcm/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace solcm {

/// Abelian groups that arise as limits and colimits: the finitely generated
/// ones plus Q, localizations Z[1/P], and finite direct sums of these, along
/// with two states of partial knowledge.
///
/// Values are kept canonical so == is structural:
///  - Fg never holds the trivial group (that is Trivial);
///  - LocalizedIntegers over all primes is Rationals;
///  - DirectSum holds at least two identified, nontrivial summands: one
///    merged Fg part first, then copies of Q, then localizations ordered by
///    descriptor;
///  - NonTrivialUnknown always carries a reason code.
class SymbolicGroup {
public:
  enum class Kind { Trivial, Fg, Rationals, LocalizedIntegers, DirectSum, NonTrivialUnknown, Unknown };

  SymbolicGroup() = default; // Trivial

  static SymbolicGroup trivial() { return {}; }
  static SymbolicGroup fg(const FgAbGroup& g);
  static SymbolicGroup cyclic(const Integer& n) { return fg(FgAbGroup::cyclic(n)); }
  static SymbolicGroup rationals();
  static SymbolicGroup localized_integers(const PrimeSet& inverted);
  static SymbolicGroup direct_sum(const std::vector<SymbolicGroup>& parts);
  static SymbolicGroup nontrivial_unknown(std::string reason);
  static SymbolicGroup unknown(std::string reason = {});

  Kind kind() const { return kind_; }
  bool is_trivial() const { return kind_ == Kind::Trivial; }
  /// Known to be nonzero (identified or not).
  bool is_nontrivial() const { return kind_ != Kind::Trivial && kind_ != Kind::Unknown; }
  /// Isomorphism type fully known.
  bool is_identified() const { return kind_ != Kind::NonTrivialUnknown && kind_ != Kind::Unknown; }
  /// Trivial or a finitely generated free group.
  bool is_free_fg() const;

  const FgAbGroup& fg_group() const;
  const PrimeSet& inverted_primes() const;
  const std::vector<SymbolicGroup>& summands() const { return parts_; }
  const std::string& reason() const { return reason_; }

  std::string to_string() const;

  friend bool operator==(const SymbolicGroup& a, const SymbolicGroup& b);

private:
  Kind kind_ = Kind::Trivial;
  FgAbGroup fg_;
  std::optional<PrimeSet> inverted_;
  std::vector<SymbolicGroup> parts_;
  std::string reason_;
};

/// The coefficient ring viewed as an abelian group.
SymbolicGroup ring_group(const CoefficientRing& ring);

/// A (x) R, Tor(A, R), Hom(A, R), Ext(A, R) for finitely generated A; all
/// additive over direct sums, composite moduli included.
SymbolicGroup tensor_with(const FgAbGroup& a, const CoefficientRing& ring);
SymbolicGroup tor_with(const FgAbGroup& a, const CoefficientRing& ring);
SymbolicGroup hom_into(const FgAbGroup& a, const CoefficientRing& ring);
SymbolicGroup ext_into(const FgAbGroup& a, const CoefficientRing& ring);

} // namespace solcm
