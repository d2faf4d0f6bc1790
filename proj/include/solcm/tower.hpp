#pragma once

#include "solcm/abelian.hpp"
#include "solcm/primes.hpp"
#include "solcm/ring.hpp"
#include "solcm/symbolic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace solcm {

enum class Direction { Inverse, Direct };

/// Every bond is multiplication by n(i + offset) on the base ring, i >= 1.
struct MultiplicationTower {
  CoefficientRing base;
  MultiplierSequence multipliers;
  std::size_t offset = 0;
};

/// Levels A_0 .. A_{k-1} with explicit bonds, continued forever by A_{k-1}
/// and the tail endomorphism (identity when absent).
///
/// Inverse: bonds[i] maps A_{i+1} -> A_i. Direct: bonds[i] maps A_i ->
/// A_{i+1}. Matrices are in generator coordinates (target rows, source
/// columns).
struct ExplicitTower {
  std::vector<FgAbGroup> levels;
  std::vector<IntMatrix> bonds;
  std::optional<IntMatrix> tail;
};

/// The same group at every level, identity bonds.
struct ConstantTower {
  SymbolicGroup group;
};

class Tower {
public:
  using Description = std::variant<MultiplicationTower, ExplicitTower, ConstantTower>;

  static Tower multiplication(Direction d, const CoefficientRing& base,
                              const MultiplierSequence& multipliers, std::size_t offset = 0);
  /// Validates level count, shapes, and that each bond is a homomorphism.
  static Tower explicit_tower(Direction d, std::vector<FgAbGroup> levels,
                              std::vector<IntMatrix> bonds,
                              std::optional<IntMatrix> tail = std::nullopt);
  static Tower constant(Direction d, const SymbolicGroup& group);

  Direction direction() const { return direction_; }
  const Description& description() const { return description_; }

  /// Explicit form with `depth` levels. Constant multipliers are realized
  /// exactly; partial products repeat the last bond in the tail, which keeps
  /// the eventual images and kernels on a finite base. Q bases and
  /// non-finitely-generated constant groups are rejected.
  Tower realize(std::size_t depth) const;

  std::string to_string() const;

private:
  Tower(Direction d, Description desc) : direction_(d), description_(std::move(desc)) {}

  Direction direction_;
  Description description_;
};

struct MittagLeffler {
  enum class Status { Holds, Fails, UnknownAtDepth };
  Status status = Status::Holds;
  std::size_t depth = 0; ///< search depth, for UnknownAtDepth
  std::string to_string() const;
  friend bool operator==(const MittagLeffler&, const MittagLeffler&) = default;
};

inline constexpr std::size_t kDefaultSearchDepth = 64;

// Direction mismatches throw InvalidArgument. `depth` bounds the
// stabilization search on explicit towers.
SymbolicGroup colim(const Tower& t, std::size_t depth = kDefaultSearchDepth);
SymbolicGroup lim(const Tower& t, std::size_t depth = kDefaultSearchDepth);
SymbolicGroup lim_one(const Tower& t, std::size_t depth = kDefaultSearchDepth);
MittagLeffler mittag_leffler(const Tower& t, std::size_t depth = kDefaultSearchDepth);

struct TruncatedLimits {
  SymbolicGroup lim_approx;
  SymbolicGroup lim1_approx;
  bool stabilized = false;
};

/// Finite-depth view of the two-term complex prod A_i -> prod A_i,
/// (a_i) -> (a_i - f(a_{i+1})), on an explicit inverse tower.
///
/// K_M is the group of compatible sequences of length M restricted to the
/// first h = max(1, N/2) levels. lim_approx = K_N; lim1_approx = K_m / K_N
/// with m midway between h and N (the part of the image chain still
/// descending); stabilized when K_{N-1} = K_N.
TruncatedLimits truncated_limits_oracle(const Tower& t, std::size_t depth);

} // namespace solcm
