#pragma once

#include "solcm/symbolic.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace solcm {

enum class ArrowFact { IsZero, IsMono, IsEpi, IsIso };

struct SequenceTerm {
  std::string label;
  std::optional<SymbolicGroup> value; ///< nullopt: unknown term

  static SequenceTerm known(std::string label, const SymbolicGroup& g) { return {std::move(label), g}; }
  static SequenceTerm unknown(std::string label) { return {std::move(label), std::nullopt}; }
};

/// T_0 -> T_1 -> ... -> T_{n-1}, exact at every interior term. Arrow i goes
/// from T_i to T_{i+1}.
class ExactSequence {
public:
  ExactSequence(std::vector<SequenceTerm> terms,
                std::map<std::size_t, std::vector<ArrowFact>> facts = {});

  std::size_t size() const { return terms_.size(); }
  const std::vector<SequenceTerm>& terms() const { return terms_; }
  const std::map<std::size_t, std::vector<ArrowFact>>& facts() const { return facts_; }

private:
  std::vector<SequenceTerm> terms_;
  std::map<std::size_t, std::vector<ArrowFact>> facts_;
};

/// R0 is bookkeeping (maps out of or into 0); R1-R6 are the deduction rules:
///  R1  0 -> U -> 0 gives U = 0
///  R2  an isomorphism onto or from an identified group
///  R3  exactness squeezes U to 0 (zero in and zero out, or a map that is
///      both zero and mono/epi)
///  R4  exactness at a term: in epi <=> out zero, in zero <=> out mono
///  R5  mono from, or epi onto, a nonzero group makes U nonzero
///  R6  0 -> A -> U -> C -> 0 with C free finitely generated splits
enum class Rule { R0, R1, R2, R3, R4, R5, R6 };
std::string rule_name(Rule r);

struct Conclusion {
  enum class Kind { ArrowZero, ArrowMono, ArrowEpi, TermNonTrivial, TermValue };
  Kind kind = Kind::TermValue;
  SymbolicGroup value; ///< for TermValue

  friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

struct RuleStep {
  Rule rule = Rule::R0;
  std::size_t index = 0; ///< arrow index for arrow conclusions, else term index
  Conclusion conclusion;

  bool about_arrow() const { return conclusion.kind <= Conclusion::Kind::ArrowEpi; }
  std::string to_string(const ExactSequence& s) const;
  friend bool operator==(const RuleStep&, const RuleStep&) = default;
};

struct TermVerdict {
  enum class Kind { Determined, NonTrivial, Undetermined };
  Kind kind = Kind::Undetermined;
  SymbolicGroup value; ///< for Determined
  bool given = false;  ///< the term was an input, not deduced

  std::string to_string() const;
  friend bool operator==(const TermVerdict&, const TermVerdict&) = default;
};

struct Deduction {
  std::vector<TermVerdict> verdicts;
  std::vector<RuleStep> steps;
};

/// Applies the rules to a fixpoint in a fixed order; the result is
/// deterministic. Contradictory facts throw InconsistencyError.
Deduction deduce(const ExactSequence& s);

/// Re-derives each step from the facts established before it and returns
/// the resulting verdicts; a step that does not follow throws
/// InconsistencyError.
std::vector<TermVerdict> replay(const ExactSequence& s, const std::vector<RuleStep>& steps);

} // namespace solcm
