#include "support.hpp"

#include "solcm/error.hpp"
#include "solcm/tower.hpp"

#include <doctest.h>

using namespace solcm;

namespace {

const auto Inv = Direction::Inverse;
const auto Dir = Direction::Direct;

Tower mult(Direction d, const CoefficientRing& base, const PrimeSet& p, std::size_t offset = 0) {
  return Tower::multiplication(d, base, MultiplierSequence::from_primes(p), offset);
}

Tower mult_const(Direction d, const CoefficientRing& base, long n) {
  return Tower::multiplication(d, base, MultiplierSequence::constant(n));
}

CoefficientRing mod(long m) { return CoefficientRing::modular(m); }

PrimeSet random_prime_set(std::mt19937& rng) {
  static const std::vector<Integer> small = {2, 3, 5, 7, 11, 13};
  switch (testing::uniform(rng, 0, 3)) {
  case 0:
    return PrimeSet::all();
  case 1: {
    std::vector<Integer> ex;
    for (const auto& p : small)
      if (testing::uniform(rng, 0, 2) == 0)
        ex.push_back(p);
    return PrimeSet::all_except(ex);
  }
  default: {
    std::vector<Integer> in;
    for (const auto& p : small)
      if (testing::uniform(rng, 0, 1) == 0)
        in.push_back(p);
    if (in.empty())
      in.push_back(small[testing::uniform(rng, 0, 5)]);
    return PrimeSet::finite(in);
  }
  }
}

} // namespace

TEST_CASE("prime sets") {
  const PrimeSet f = PrimeSet::parse("5, 3,3,2");
  CHECK(f.listed() == std::vector<Integer>{2, 3, 5});
  CHECK(f.descriptor() == "2,3,5");
  CHECK(f.contains(3));
  CHECK_FALSE(f.contains(7));
  CHECK(f.index(5) == 3u);
  CHECK(f.nth(2) == 3);

  const PrimeSet a = PrimeSet::parse("all");
  CHECK(a.contains(101));
  CHECK(a.index(7) == 4u);
  CHECK(a.nth(5) == 11);

  const PrimeSet e = PrimeSet::parse("all-except:2,7");
  CHECK_FALSE(e.contains(2));
  CHECK(e.contains(3));
  CHECK(e.nth(1) == 3);
  CHECK(e.nth(3) == 11);
  CHECK(e.index(11) == 3u);
  CHECK_FALSE(e.index(7));
  CHECK(PrimeSet::parse(e.descriptor()) == e);

  for (const char* bad : {"", "  ", "4", "2,,3", "all-except:9", "all-except:", "x", "2;3"})
    CHECK_THROWS_AS(PrimeSet::parse(bad), InvalidArgument);
  CHECK_THROWS_AS(PrimeSet::finite({}), InvalidArgument);
}

TEST_CASE("multiplier sequences") {
  const auto fin = MultiplierSequence::from_primes(PrimeSet::finite({2, 3}));
  CHECK(fin.mode() == MultiplierSequence::Mode::ConstantProduct);
  CHECK(fin.at(1) == 6);
  CHECK(fin.at(40) == 6);

  const auto all = MultiplierSequence::from_primes(PrimeSet::all());
  CHECK(all.mode() == MultiplierSequence::Mode::PartialProducts);
  CHECK(all.at(1) == 2);
  CHECK(all.at(4) == 210);
  for (std::size_t i = 1; i < 20; ++i)
    CHECK(all.at(i + 1) % all.at(i) == 0);

  // For prime r: divides_eventually <=> r in P, never_divides <=> r not in P.
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const PrimeSet p = random_prime_set(rng);
    const auto n = MultiplierSequence::from_primes(p);
    for (long r : {2, 3, 5, 7, 11, 13, 17}) {
      CHECK(n.divides_eventually(r) == p.contains(r));
      CHECK(n.never_divides(r) == !p.contains(r));
    }
    CHECK(n.exceeds_one_infinitely_often());
    CHECK(n.support() == p);
  }
  const auto one = MultiplierSequence::constant(1);
  CHECK_FALSE(one.exceeds_one_infinitely_often());
  CHECK_FALSE(one.support());
  CHECK(one.strip_support(12) == 12);
  CHECK(fin.strip_support(60) == 5);
  CHECK(fin.strip_support(1) == 1);
}

TEST_CASE("symbolic colim") {
  const PrimeSet p23 = PrimeSet::finite({2, 3});
  CHECK(colim(mult(Dir, mod(2), p23)).is_trivial());
  CHECK(colim(mult(Dir, mod(5), p23)) == SymbolicGroup::cyclic(5));
  CHECK(colim(mult(Dir, mod(60), p23)) == SymbolicGroup::cyclic(5));
  CHECK(colim(mult(Dir, CoefficientRing::integers(), p23)) == SymbolicGroup::localized_integers(p23));
  CHECK(colim(mult(Dir, CoefficientRing::integers(), PrimeSet::all())) == SymbolicGroup::rationals());
  CHECK(colim(mult_const(Dir, CoefficientRing::integers(), 1)) == SymbolicGroup::cyclic(0));
  CHECK(colim(mult(Dir, CoefficientRing::rationals(), p23)) == SymbolicGroup::rationals());
  CHECK_THROWS_AS(colim(mult(Inv, mod(2), p23)), InvalidArgument);
}

TEST_CASE("symbolic lim, lim1 and Mittag-Leffler") {
  const PrimeSet p2 = PrimeSet::finite({2});
  const PrimeSet p23 = PrimeSet::finite({2, 3});
  CHECK(lim(mult(Inv, mod(2), p23)).is_trivial());
  CHECK(lim(mult(Inv, mod(5), p23)) == SymbolicGroup::cyclic(5));
  CHECK(lim(mult(Inv, CoefficientRing::integers(), p2)).is_trivial());
  CHECK(lim(mult_const(Inv, CoefficientRing::integers(), 1)) == SymbolicGroup::cyclic(0));
  CHECK(lim(mult(Inv, CoefficientRing::rationals(), p2)) == SymbolicGroup::rationals());

  using S = MittagLeffler::Status;
  CHECK(mittag_leffler(mult(Inv, mod(7), PrimeSet::all())).status == S::Holds);
  CHECK(mittag_leffler(mult(Inv, CoefficientRing::integers(), PrimeSet::all())).status == S::Fails);
  CHECK(mittag_leffler(mult(Inv, CoefficientRing::rationals(), p2)).status == S::Holds);
  CHECK(mittag_leffler(mult_const(Inv, CoefficientRing::integers(), 1)).status == S::Holds);

  CHECK(lim_one(mult(Inv, mod(4), p2)).is_trivial());
  CHECK(lim_one(Tower::constant(Inv, SymbolicGroup::cyclic(0))).is_trivial());
  const SymbolicGroup z2 = lim_one(mult_const(Inv, CoefficientRing::integers(), 2));
  CHECK(z2.kind() == SymbolicGroup::Kind::NonTrivialUnknown);
  CHECK(z2.reason() == "ml-fails-fg-tower");
  CHECK_THROWS_AS(lim(mult(Dir, mod(2), p2)), InvalidArgument);
  CHECK_THROWS_AS(lim_one(mult(Dir, mod(2), p2)), InvalidArgument);
  CHECK_THROWS_AS(mittag_leffler(mult(Dir, mod(2), p2)), InvalidArgument);
}

TEST_CASE("truncated oracle: fixed cases") {
  SUBCASE("constant Z_5") {
    const auto r = truncated_limits_oracle(Tower::constant(Inv, SymbolicGroup::cyclic(5)), 8);
    CHECK(r.lim_approx == SymbolicGroup::cyclic(5));
    CHECK(r.lim1_approx.is_trivial());
    CHECK(r.stabilized);
  }
  SUBCASE("Z_5 with x5 bonds") {
    const auto r = truncated_limits_oracle(mult_const(Inv, mod(5), 5), 8);
    CHECK(r.lim_approx.is_trivial());
    CHECK(r.lim1_approx.is_trivial());
    CHECK(r.stabilized);
    CHECK(r.lim_approx == lim(mult(Inv, mod(5), PrimeSet::finite({5}))));
  }
  SUBCASE("Z with x2 bonds does not stabilize") {
    const auto r = truncated_limits_oracle(mult_const(Inv, CoefficientRing::integers(), 2), 8);
    CHECK_FALSE(r.stabilized);
    CHECK_FALSE(r.lim1_approx.is_trivial());
    // Every finite window still sees a copy of Z; the symbolic answer is 0.
    CHECK(r.lim_approx == SymbolicGroup::cyclic(0));
  }
  CHECK_THROWS_AS(truncated_limits_oracle(mult_const(Inv, mod(5), 5), 1), InvalidArgument);
  CHECK_THROWS_AS(truncated_limits_oracle(mult_const(Dir, mod(5), 5), 8), InvalidArgument);
  CHECK_THROWS_AS(truncated_limits_oracle(mult_const(Inv, CoefficientRing::rationals(), 5), 8),
                  InvalidArgument);
}

TEST_CASE("realized multiplication towers agree with the symbolic rules") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const PrimeSet p = random_prime_set(rng);
    const CoefficientRing base = mod(testing::uniform(rng, 2, 30));
    const std::size_t offset = testing::uniform(rng, 0, 3);
    const Tower inv = mult(Inv, base, p, offset);
    CAPTURE(inv.to_string());
    const Tower real = inv.realize(32);
    CHECK(lim(real) == lim(inv));
    CHECK(lim_one(real) == lim_one(inv));
    const auto o = truncated_limits_oracle(inv, 32);
    CHECK(o.stabilized);
    CHECK(o.lim_approx == lim(inv));
    CHECK(o.lim1_approx == lim_one(inv));

    const Tower dir = mult(Dir, base, p, offset);
    CHECK(colim(dir.realize(32)) == colim(dir));
    // Order of the colimit divides m.
    const SymbolicGroup c = colim(dir);
    const Integer order = c.is_trivial() ? Integer(1) : c.fg_group().order();
    CHECK(base.modulus() % order == 0);
  }
}

TEST_CASE("lim1 vanishes whenever Mittag-Leffler holds") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    CoefficientRing base = CoefficientRing::integers();
    switch (testing::uniform(rng, 0, 2)) {
    case 0:
      base = CoefficientRing::rationals();
      break;
    case 1:
      base = mod(testing::uniform(rng, 2, 50));
      break;
    default:
      break;
    }
    const Tower t = testing::uniform(rng, 0, 3) == 0
                        ? mult_const(Inv, base, testing::uniform(rng, 1, 6))
                        : mult(Inv, base, random_prime_set(rng), testing::uniform(rng, 0, 4));
    if (mittag_leffler(t).status == MittagLeffler::Status::Holds)
      CHECK(lim_one(t).is_trivial());
    else
      CHECK(lim_one(t).is_nontrivial());
  }
}

TEST_CASE("colim of eventually invertible bonds is the base") {
  for (long m : {5, 7, 11, 25, 49, 77})
    for (const PrimeSet& p : {PrimeSet::finite({2, 3}), PrimeSet::all_except({5, 7, 11})}) {
      const Tower t = mult(Dir, mod(m), p);
      if (std::gcd(m, 6L) == 1 && !p.contains(5) && !p.contains(7) && !p.contains(11))
        CHECK(colim(t) == SymbolicGroup::cyclic(m));
      CHECK(colim(t.realize(16)) == colim(t));
    }
}

TEST_CASE("offset does not change any answer") {
  for (const PrimeSet& p : {PrimeSet::finite({2}), PrimeSet::finite({3, 5, 7}), PrimeSet::all(),
                            PrimeSet::all_except({2})})
    for (const CoefficientRing& r : {mod(2), mod(3), mod(35), CoefficientRing::integers(),
                                     CoefficientRing::rationals()})
      for (std::size_t off : {1u, 2u, 5u}) {
        CHECK(colim(mult(Dir, r, p, off)) == colim(mult(Dir, r, p)));
        CHECK(lim(mult(Inv, r, p, off)) == lim(mult(Inv, r, p)));
        CHECK(lim_one(mult(Inv, r, p, off)) == lim_one(mult(Inv, r, p)));
        CHECK(mittag_leffler(mult(Inv, r, p, off)) == mittag_leffler(mult(Inv, r, p)));
      }
}

TEST_CASE("explicit towers") {
  const FgAbGroup Z = FgAbGroup::free(1);
  const auto scalar = [](long n) { return IntMatrix::from_rows({{n}}); };

  SUBCASE("direct Z with x2 is Z[1/2]") {
    const Tower t = Tower::explicit_tower(Dir, {Z}, {}, scalar(2));
    CHECK(colim(t) == SymbolicGroup::localized_integers(PrimeSet::finite({2})));
  }
  SUBCASE("direct Z with x6 is Z[1/2,1/3]") {
    const Tower t = Tower::explicit_tower(Dir, {Z}, {}, scalar(6));
    CHECK(colim(t) == SymbolicGroup::localized_integers(PrimeSet::finite({2, 3})));
  }
  SUBCASE("direct Z_12 with x2 is Z_3") {
    const Tower t = Tower::explicit_tower(Dir, {FgAbGroup::cyclic(12)}, {}, scalar(2));
    CHECK(colim(t) == SymbolicGroup::cyclic(3));
  }
  SUBCASE("direct Z^2 with a non-invertible rank-2 map") {
    const Tower t = Tower::explicit_tower(Dir, {FgAbGroup::free(2)}, {},
                                          IntMatrix::from_rows({{2, 0}, {0, 3}}));
    CHECK(colim(t).kind() == SymbolicGroup::Kind::NonTrivialUnknown);
  }
  SUBCASE("inverse Z with x2 fails Mittag-Leffler with a certificate") {
    const Tower t = Tower::explicit_tower(Inv, {Z}, {}, scalar(2));
    CHECK(mittag_leffler(t).status == MittagLeffler::Status::Fails);
    CHECK(lim_one(t).kind() == SymbolicGroup::Kind::NonTrivialUnknown);
    CHECK(lim(t).kind() == SymbolicGroup::Kind::Unknown);
  }
  SUBCASE("inverse Z with x(-1) is an automorphism") {
    const Tower t = Tower::explicit_tower(Inv, {Z}, {}, scalar(-1));
    CHECK(lim(t) == SymbolicGroup::cyclic(0));
    CHECK(lim_one(t).is_trivial());
  }
  SUBCASE("inverse Z^2 with a nilpotent tail") {
    const Tower t = Tower::explicit_tower(Inv, {FgAbGroup::free(2)}, {},
                                          IntMatrix::from_rows({{0, 1}, {0, 0}}));
    CHECK(lim(t).is_trivial());
    CHECK(mittag_leffler(t).status == MittagLeffler::Status::Holds);
  }
  SUBCASE("prefix then tail") {
    // Z_4 <- Z_8 (x2), then x3 on Z_8 forever: lim = Z_8.
    const Tower t = Tower::explicit_tower(Inv, {FgAbGroup::cyclic(4), FgAbGroup::cyclic(8)},
                                          {scalar(1)}, scalar(3));
    CHECK(lim(t) == SymbolicGroup::cyclic(8));
    const auto o = truncated_limits_oracle(t, 16);
    CHECK(o.stabilized);
    CHECK(o.lim_approx == SymbolicGroup::cyclic(8));
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(Tower::explicit_tower(Inv, {}, {}), InvalidArgument);
    CHECK_THROWS_AS(Tower::explicit_tower(Inv, {Z, Z}, {}), InvalidArgument);
    // x1 : Z_6 -> Z_4 is not a homomorphism.
    CHECK_THROWS_AS(Tower::explicit_tower(Inv, {FgAbGroup::cyclic(4), FgAbGroup::cyclic(6)}, {scalar(1)}),
                    InvalidArgument);
    CHECK_THROWS_AS(Tower::explicit_tower(Inv, {FgAbGroup::cyclic(4)}, {}, IntMatrix::identity(2)),
                    InvalidArgument);
  }
}

TEST_CASE("random cyclic towers match the truncated oracle") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const Tower t = testing::random_cyclic_tower(rng, 24, 8);
    const auto o = truncated_limits_oracle(t, 24);
    CHECK(o.stabilized);
    CHECK(o.lim_approx == lim(t));
    CHECK(o.lim1_approx == lim_one(t));
    CHECK(mittag_leffler(t).status == MittagLeffler::Status::Holds);
  }
}

TEST_CASE("realize") {
  const Tower t = mult(Inv, mod(6), PrimeSet::all());
  const Tower r = t.realize(4);
  const auto& e = std::get<ExplicitTower>(r.description());
  CHECK(e.levels.size() == 4);
  CHECK(e.bonds.size() == 3);
  CHECK(e.bonds[0] == IntMatrix::from_rows({{2}}));  // n(1) = 2
  CHECK(e.bonds[1] == IntMatrix::from_rows({{0}}));  // n(2) = 6
  CHECK(e.tail);
  CHECK_THROWS_AS(mult(Inv, CoefficientRing::rationals(), PrimeSet::all()).realize(4), InvalidArgument);
  CHECK_THROWS_AS(Tower::constant(Inv, SymbolicGroup::rationals()).realize(4), InvalidArgument);
  CHECK_THROWS_AS(t.realize(0), InvalidArgument);
}
