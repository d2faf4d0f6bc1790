#pragma once

#include "solcm/int_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace solcm {

/// A nonempty set of primes: an explicit finite list, all primes, or all
/// primes except a finite list. Infinite sets are enumerated in ascending
/// order.
class PrimeSet {
public:
  enum class Kind { Finite, All, AllExcept };

  /// Sorts and deduplicates; rejects empty lists and non-primes.
  static PrimeSet finite(std::vector<Integer> primes);
  static PrimeSet all();
  static PrimeSet all_except(std::vector<Integer> excluded);
  /// "2,3,5" | "all" | "all-except:2,7".
  static PrimeSet parse(std::string_view spec);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Members (Finite) or exclusions (AllExcept); empty for All.
  const std::vector<Integer>& listed() const { return listed_; }

  bool contains(const Integer& p) const;
  /// 1-based position of p in the ascending enumeration, if p is a member.
  std::optional<std::size_t> index(const Integer& p) const;
  /// The i-th member (1-based).
  Integer nth(std::size_t i) const;

  std::string descriptor() const;

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) = default;

private:
  PrimeSet() = default;

  Kind kind_ = Kind::All;
  std::vector<Integer> listed_;
};

/// The bonding multipliers n(1), n(2), ...
///
/// ConstantProduct: n(i) = a fixed n >= 1 (a finite prime set gives the
/// product of its members). PartialProducts: n(i) = p_1 * ... * p_i over an
/// infinite prime set.
class MultiplierSequence {
public:
  enum class Mode { ConstantProduct, PartialProducts };

  static MultiplierSequence from_primes(const PrimeSet& primes);
  static MultiplierSequence constant(const Integer& n);

  Mode mode() const { return mode_; }
  /// n(i), i >= 1.
  Integer at(std::size_t i) const;

  /// r | n(i) for all sufficiently large i.
  bool divides_eventually(const Integer& r) const;
  /// r divides no n(i).
  bool never_divides(const Integer& r) const;
  bool exceeds_one_infinitely_often() const;
  /// Primes dividing some n(i); nullopt when every n(i) is 1.
  std::optional<PrimeSet> support() const;
  /// m with every prime factor dividing some n(i) removed.
  Integer strip_support(const Integer& m) const;

  std::string to_string() const;

  friend bool operator==(const MultiplierSequence& a, const MultiplierSequence& b) = default;

private:
  Mode mode_ = Mode::ConstantProduct;
  Integer constant_ = 1;
  std::optional<PrimeSet> primes_;
};

} // namespace solcm
