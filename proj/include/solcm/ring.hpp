#pragma once

#include "solcm/int_matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace solcm {

/// Coefficients: Z, Q, or Z_m with m >= 2 (composite allowed).
class CoefficientRing {
public:
  enum class Kind { Integers, Rationals, Modular };

  static CoefficientRing integers();
  static CoefficientRing rationals();
  static CoefficientRing modular(const Integer& m);
  /// "Z", "Q" or "mod:<m>".
  static CoefficientRing parse(std::string_view spec);

  Kind kind() const { return kind_; }
  bool is_integers() const { return kind_ == Kind::Integers; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool is_modular() const { return kind_ == Kind::Modular; }
  /// Only valid for Z_m.
  const Integer& modulus() const;
  bool is_prime_field() const { return prime_; }
  bool is_field() const { return prime_ || kind_ == Kind::Rationals; }

  /// Display form: "Z", "Q", "Z_5".
  std::string to_string() const;
  /// Round-trips through parse(): "Z", "Q", "mod:5".
  std::string spec() const;

  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) = default;

private:
  Kind kind_ = Kind::Integers;
  Integer modulus_ = 0;
  bool prime_ = false;
};

bool is_prime(const Integer& n);

/// Prime factors of n >= 1 with multiplicity, ascending. Trial division
/// with a primality test on the cofactor; rejects inputs with two prime
/// factors above the trial bound.
std::vector<Integer> factorize(const Integer& n);
/// Distinct prime factors, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

} // namespace solcm
