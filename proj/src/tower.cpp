#include "solcm/tower.hpp"

#include "solcm/error.hpp"

#include <sstream>

namespace solcm {

namespace {

const char* direction_name(Direction d) { return d == Direction::Inverse ? "inverse" : "direct"; }

void require(const Tower& t, Direction d, const char* op) {
  if (t.direction() != d)
    throw InvalidArgument(std::string(op) + " needs a " + direction_name(d) + " tower, got a " +
                          direction_name(t.direction()) + " one");
}

// Level i and bond i of an explicit tower, continued by the tail.
const FgAbGroup& level(const ExplicitTower& e, std::size_t i) {
  return e.levels[std::min(i, e.levels.size() - 1)];
}

IntMatrix bond(const ExplicitTower& e, std::size_t i) {
  if (i < e.bonds.size())
    return e.bonds[i];
  if (e.tail)
    return *e.tail;
  return IntMatrix::identity(e.levels.back().generator_count());
}

IntMatrix tail_map(const ExplicitTower& e) { return bond(e, e.bonds.size()); }

IntMatrix no_columns(std::size_t rows) { return IntMatrix(rows, 0); }

std::string depth_reason(std::size_t depth) {
  return "no-stabilization-within-depth-" + std::to_string(depth);
}

// Characteristic polynomial coefficients c_0 .. c_n (c_n = 1) by
// Faddeev-LeVerrier; every division is exact over the integers.
std::vector<Integer> characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i)
      next(i, i) += c[n - k + 1];
    mk = std::move(next);
    IntMatrix prod = m * mk;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      trace += prod(i, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), k);
    c[n - k] = -q;
  }
  return c;
}

// The image chain g^k(A) can only stabilize if g is invertible on the
// rational span of the eventual image, i.e. the product of the nonzero
// eigenvalues of g on the free part is a unit.
bool image_chain_never_stabilizes(const FgAbGroup& a, const IntMatrix& g) {
  const std::size_t f = a.free_rank();
  if (f == 0)
    return false;
  std::vector<Integer> c = characteristic_polynomial(g.block(0, 0, f, f));
  std::size_t m = 0;
  while (c[m] == 0)
    ++m;
  if (m == f)
    return false; // nilpotent on the free part
  return abs(c[m]) != 1;
}

struct ImageChain {
  MittagLeffler ml;
  IntMatrix eventual; // generators of the stable image, when ml holds
};

ImageChain image_chain(const ExplicitTower& e, std::size_t depth) {
  const FgAbGroup& a = e.levels.back();
  const Presentation p = Presentation::of(a);
  const IntMatrix g = tail_map(e);
  IntMatrix current = IntMatrix::identity(a.generator_count());
  for (std::size_t k = 0; k < depth; ++k) {
    IntMatrix next = g * current;
    if (same_subgroup(p, current, next))
      return {{MittagLeffler::Status::Holds, 0}, current};
    current = std::move(next);
  }
  if (image_chain_never_stabilizes(a, g))
    return {{MittagLeffler::Status::Fails, 0}, {}};
  return {{MittagLeffler::Status::UnknownAtDepth, depth}, {}};
}

SymbolicGroup explicit_colim(const ExplicitTower& e, std::size_t depth) {
  // colim(A, g) = (A / ker g^inf)[g^-1]; the kernels ascend and stabilize.
  const FgAbGroup& a = e.levels.back();
  const std::size_t n = a.generator_count();
  const Presentation p = Presentation::of(a);
  const IntMatrix g = tail_map(e);
  IntMatrix power = IntMatrix::identity(n);
  IntMatrix kernel = no_columns(n);
  std::optional<IntMatrix> stable;
  for (std::size_t k = 0; k < depth; ++k) {
    power = g * power;
    IntMatrix next = kernel_generators(p, p, power);
    if (same_subgroup(p, kernel, next)) {
      stable = kernel;
      break;
    }
    kernel = std::move(next);
  }
  if (!stable)
    return SymbolicGroup::unknown(depth_reason(depth));

  const Presentation quotient{n, hstack(p.relations, *stable)};
  const FgAbGroup q = quotient.group();
  const IntMatrix all = IntMatrix::identity(n);
  if (subgroup_contains(quotient, g, all))
    return SymbolicGroup::fg(q);
  // g is injective but not onto on A/K: an infinite strictly ascending
  // union, never finitely generated. On Z it is multiplication by the index.
  if (q == FgAbGroup::free(1)) {
    const FgAbGroup index = subquotient_type(quotient, all, g);
    return SymbolicGroup::localized_integers(PrimeSet::finite(prime_divisors(index.order())));
  }
  return SymbolicGroup::nontrivial_unknown("colim-not-finitely-generated");
}

SymbolicGroup ml_to_lim_one(const MittagLeffler& ml, bool finitely_generated) {
  switch (ml.status) {
  case MittagLeffler::Status::Holds:
    return SymbolicGroup::trivial();
  case MittagLeffler::Status::Fails:
    // Countable towers failing ML have nonzero lim^1 (Gray).
    return finitely_generated ? SymbolicGroup::nontrivial_unknown("ml-fails-fg-tower")
                              : SymbolicGroup::unknown("ml-fails");
  case MittagLeffler::Status::UnknownAtDepth:
    return SymbolicGroup::unknown(depth_reason(ml.depth));
  }
  return {};
}

Presentation product(const ExplicitTower& e, std::size_t count, std::vector<std::size_t>& offsets) {
  Presentation p;
  offsets.clear();
  for (std::size_t i = 0; i < count; ++i) {
    offsets.push_back(p.generators);
    p = direct_sum(p, Presentation::of(level(e, i)));
  }
  offsets.push_back(p.generators);
  return p;
}

// Compatible sequences of length m restricted to the first h levels.
IntMatrix compatible_window(const ExplicitTower& e, std::size_t m, std::size_t h) {
  std::vector<std::size_t> off;
  const Presentation source = product(e, m, off);
  std::vector<std::size_t> target_off;
  const Presentation target = product(e, m - 1, target_off);
  IntMatrix shift(target.generators, source.generators);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const IntMatrix f = bond(e, i);
    for (std::size_t r = 0; r < level(e, i).generator_count(); ++r) {
      shift(target_off[i] + r, off[i] + r) += 1;
      for (std::size_t c = 0; c < f.cols(); ++c)
        shift(target_off[i] + r, off[i + 1] + c) -= f(r, c);
    }
  }
  IntMatrix kernel = kernel_generators(source, target, shift);
  return kernel.block(0, 0, off[h], kernel.cols());
}

} // namespace

Tower Tower::multiplication(Direction d, const CoefficientRing& base,
                            const MultiplierSequence& multipliers, std::size_t offset) {
  return Tower(d, MultiplicationTower{base, multipliers, offset});
}

Tower Tower::explicit_tower(Direction d, std::vector<FgAbGroup> levels,
                            std::vector<IntMatrix> bonds, std::optional<IntMatrix> tail) {
  if (levels.empty())
    throw InvalidArgument("explicit tower needs at least one level");
  if (bonds.size() + 1 != levels.size())
    throw InvalidArgument("explicit tower needs exactly one bond between consecutive levels");
  for (std::size_t i = 0; i < bonds.size(); ++i) {
    const FgAbGroup& src = d == Direction::Inverse ? levels[i + 1] : levels[i];
    const FgAbGroup& dst = d == Direction::Inverse ? levels[i] : levels[i + 1];
    if (!is_homomorphism(Presentation::of(src), Presentation::of(dst), bonds[i]))
      throw InvalidArgument("explicit tower: bond " + std::to_string(i) +
                            " is not a homomorphism " + src.to_string() + " -> " +
                            dst.to_string());
  }
  if (tail) {
    const Presentation last = Presentation::of(levels.back());
    if (!is_homomorphism(last, last, *tail))
      throw InvalidArgument("explicit tower: tail is not an endomorphism of the last level");
  }
  return Tower(d, ExplicitTower{std::move(levels), std::move(bonds), std::move(tail)});
}

Tower Tower::constant(Direction d, const SymbolicGroup& group) {
  return Tower(d, ConstantTower{group});
}

Tower Tower::realize(std::size_t depth) const {
  if (depth == 0)
    throw InvalidArgument("realize: depth must be positive");
  ExplicitTower out;
  if (const auto* m = std::get_if<MultiplicationTower>(&description_)) {
    if (m->base.is_rationals())
      throw InvalidArgument("realize: Q is not finitely generated");
    const Integer modulus = m->base.is_modular() ? m->base.modulus() : Integer(0);
    const auto multiplier = [&](std::size_t i) {
      Integer n = m->multipliers.at(i + m->offset);
      if (modulus != 0)
        n %= modulus;
      return IntMatrix::scalar(1, n);
    };
    out.levels.assign(depth, FgAbGroup::cyclic(modulus));
    for (std::size_t i = 1; i < depth; ++i)
      out.bonds.push_back(multiplier(i));
    out.tail = multiplier(depth);
  } else if (const auto* e = std::get_if<ExplicitTower>(&description_)) {
    for (std::size_t i = 0; i < depth; ++i)
      out.levels.push_back(level(*e, i));
    for (std::size_t i = 0; i + 1 < depth; ++i)
      out.bonds.push_back(bond(*e, i));
    out.tail = bond(*e, depth - 1);
  } else {
    const SymbolicGroup& g = std::get<ConstantTower>(description_).group;
    if (g.kind() != SymbolicGroup::Kind::Fg && !g.is_trivial())
      throw InvalidArgument("realize: constant group " + g.to_string() +
                            " is not finitely generated");
    const FgAbGroup a = g.is_trivial() ? FgAbGroup{} : g.fg_group();
    out.levels.assign(depth, a);
    out.bonds.assign(depth - 1, IntMatrix::identity(a.generator_count()));
  }
  return Tower(direction_, std::move(out));
}

std::string Tower::to_string() const {
  std::ostringstream s;
  s << direction_name(direction_) << ' ';
  if (const auto* m = std::get_if<MultiplicationTower>(&description_)) {
    s << "tower " << m->base.to_string() << ", bonds x n(i";
    if (m->offset)
      s << '+' << m->offset;
    s << "), n " << m->multipliers.to_string();
  } else if (const auto* e = std::get_if<ExplicitTower>(&description_)) {
    s << "explicit tower of " << e->levels.size() << " levels";
  } else {
    s << "constant tower " << std::get<ConstantTower>(description_).group.to_string();
  }
  return s.str();
}

std::string MittagLeffler::to_string() const {
  switch (status) {
  case Status::Holds:
    return "holds";
  case Status::Fails:
    return "fails";
  case Status::UnknownAtDepth:
    return "unknown at depth " + std::to_string(depth);
  }
  return {};
}

SymbolicGroup colim(const Tower& t, std::size_t depth) {
  require(t, Direction::Direct, "colim");
  const auto& d = t.description();
  if (const auto* m = std::get_if<MultiplicationTower>(&d)) {
    switch (m->base.kind()) {
    case CoefficientRing::Kind::Modular:
      return SymbolicGroup::cyclic(m->multipliers.strip_support(m->base.modulus()));
    case CoefficientRing::Kind::Integers:
      if (auto support = m->multipliers.support())
        return SymbolicGroup::localized_integers(*support);
      return SymbolicGroup::cyclic(0);
    case CoefficientRing::Kind::Rationals:
      return SymbolicGroup::rationals();
    }
  }
  if (const auto* e = std::get_if<ExplicitTower>(&d))
    return explicit_colim(*e, depth);
  return std::get<ConstantTower>(d).group;
}

MittagLeffler mittag_leffler(const Tower& t, std::size_t depth) {
  require(t, Direction::Inverse, "mittag_leffler");
  const auto& d = t.description();
  if (const auto* m = std::get_if<MultiplicationTower>(&d)) {
    const bool fails = m->base.is_integers() && m->multipliers.exceeds_one_infinitely_often();
    return {fails ? MittagLeffler::Status::Fails : MittagLeffler::Status::Holds, 0};
  }
  if (const auto* e = std::get_if<ExplicitTower>(&d))
    return image_chain(*e, depth).ml;
  return {};
}

SymbolicGroup lim(const Tower& t, std::size_t depth) {
  require(t, Direction::Inverse, "lim");
  const auto& d = t.description();
  if (const auto* m = std::get_if<MultiplicationTower>(&d)) {
    switch (m->base.kind()) {
    case CoefficientRing::Kind::Modular:
      return SymbolicGroup::cyclic(m->multipliers.strip_support(m->base.modulus()));
    case CoefficientRing::Kind::Integers:
      return m->multipliers.exceeds_one_infinitely_often() ? SymbolicGroup::trivial()
                                                           : SymbolicGroup::cyclic(0);
    case CoefficientRing::Kind::Rationals:
      return SymbolicGroup::rationals();
    }
  }
  if (const auto* e = std::get_if<ExplicitTower>(&d)) {
    // Under ML the tail acts on the eventual image E as a surjection, hence
    // (finitely generated groups being Hopfian) an automorphism: lim = E.
    ImageChain chain = image_chain(*e, depth);
    if (chain.ml.status == MittagLeffler::Status::Holds)
      return SymbolicGroup::fg(subgroup_type(Presentation::of(e->levels.back()), chain.eventual));
    if (chain.ml.status == MittagLeffler::Status::Fails)
      return SymbolicGroup::unknown("lim-without-mittag-leffler");
    return SymbolicGroup::unknown(depth_reason(depth));
  }
  return std::get<ConstantTower>(d).group;
}

SymbolicGroup lim_one(const Tower& t, std::size_t depth) {
  require(t, Direction::Inverse, "lim_one");
  const auto& d = t.description();
  bool fg = true;
  if (const auto* m = std::get_if<MultiplicationTower>(&d))
    fg = !m->base.is_rationals();
  else if (const auto* c = std::get_if<ConstantTower>(&d))
    fg = c->group.is_trivial() || c->group.kind() == SymbolicGroup::Kind::Fg;
  return ml_to_lim_one(mittag_leffler(t, depth), fg);
}

TruncatedLimits truncated_limits_oracle(const Tower& t, std::size_t depth) {
  require(t, Direction::Inverse, "truncated_limits_oracle");
  if (depth < 2)
    throw InvalidArgument("truncated_limits_oracle: depth must be at least 2");
  const Tower realized = t.realize(depth);
  const ExplicitTower& e = std::get<ExplicitTower>(realized.description());

  const std::size_t h = std::max<std::size_t>(1, depth / 2);
  const std::size_t mid = (h + depth) / 2;
  std::vector<std::size_t> off;
  const Presentation window = product(e, h, off);

  const IntMatrix k_full = compatible_window(e, depth, h);
  const IntMatrix k_prev = compatible_window(e, depth - 1, h);
  const IntMatrix k_mid = compatible_window(e, mid, h);

  TruncatedLimits out;
  out.lim_approx = SymbolicGroup::fg(subgroup_type(window, k_full));
  out.lim1_approx = SymbolicGroup::fg(subquotient_type(window, k_mid, k_full));
  out.stabilized = same_subgroup(window, k_prev, k_full);
  return out;
}

} // namespace solcm
