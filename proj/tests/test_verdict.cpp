#include "solcm/verdict.hpp"

#include <doctest.h>

using namespace solcm;

namespace {

using Basis = ClassificationVerdict::HmBasis;

std::vector<PrimeSet> prime_sets() {
  return {PrimeSet::finite({2}), PrimeSet::finite({2, 3}), PrimeSet::finite({3, 5, 7}), PrimeSet::all(),
          PrimeSet::all_except({2})};
}

void check_invariants(const ClassificationVerdict& v) {
  if (v.cm3)
    CHECK(v.hm3);
  CHECK(v.cm3 == (v.cond1.holds && v.cond2.holds && v.cond3.holds));
  if (!v.cm3)
    CHECK_FALSE(v.cm3_reasons.empty());
  for (const ConditionCheck* c : {&v.cond1, &v.cond2, &v.cond3})
    CHECK(c->holds == c->failures.empty());
  CHECK(v.cond1.provenance == Provenance::ModelAssumption);
  if (v.hm3) {
    CHECK(v.hm3_basis == Basis::CmImpliesHm);
  } else {
    CHECK(v.hm3_provenance == Provenance::PaperAsserted);
    CHECK(v.hm3_basis == (v.local.at(2).value.is_nontrivial() ? Basis::ComputedObstruction
                                                                : Basis::PaperAsserted));
  }
}

} // namespace

TEST_CASE("fixed classifications") {
  const PrimeSet p23 = PrimeSet::finite({2, 3});

  const auto two = classify(p23, CoefficientRing::modular(2));
  CHECK(two.cm3);
  CHECK(two.hm3);
  CHECK(two.hm3_basis == Basis::CmImpliesHm);

  const auto five = classify(p23, CoefficientRing::modular(5));
  CHECK_FALSE(five.cm3);
  CHECK_FALSE(five.hm3);
  CHECK(five.hm3_basis == Basis::ComputedObstruction);
  REQUIRE_FALSE(five.cond3.failures.empty());
  CHECK(five.cond3.failures.front() == "local H^2 = Z_5");

  const auto z = classify(p23, CoefficientRing::integers());
  CHECK_FALSE(z.cm3);
  CHECK_FALSE(z.cond2.holds);
  CHECK_FALSE(z.cond3.holds);
  CHECK(z.cond2.failures.front() == "clc degree 1 fails");
}

TEST_CASE("classification matrix") {
  for (const PrimeSet& p : prime_sets()) {
    CAPTURE(p.descriptor());
    for (long q : {2, 3, 5, 7, 11, 13}) {
      CAPTURE(q);
      const auto v = classify(p, CoefficientRing::modular(q));
      CHECK(v.cm3 == p.contains(q));
      CHECK(v.hm3 == p.contains(q));
      CHECK_FALSE(v.beyond_paper);
      check_invariants(v);
    }
    for (const CoefficientRing& r : {CoefficientRing::integers(), CoefficientRing::rationals()}) {
      const auto v = classify(p, r);
      CHECK_FALSE(v.cm3);
      CHECK_FALSE(v.hm3);
      check_invariants(v);
    }
  }
}

TEST_CASE("composite moduli classify by factoring") {
  for (const PrimeSet& p : prime_sets())
    for (long m : {4, 6, 10, 15, 21, 35, 12, 77}) {
      const auto v = classify(p, CoefficientRing::modular(m));
      bool all_in = true;
      for (const Integer& f : prime_divisors(m))
        all_in = all_in && p.contains(f);
      CHECK(v.beyond_paper);
      CHECK(v.cm3 == all_in);
      check_invariants(v);
    }
}

TEST_CASE("verdicts depend only on membership of the coefficient prime") {
  for (long q : {2, 3, 5, 7}) {
    const CoefficientRing r = CoefficientRing::modular(q);
    const auto with = classify(PrimeSet::finite({q}), r);
    const auto without = classify(PrimeSet::finite({q == 2 ? 3 : 2}), r);
    for (const PrimeSet& p : prime_sets()) {
      const auto v = classify(p, r);
      const auto& ref = p.contains(q) ? with : without;
      CHECK(v.cm3 == ref.cm3);
      CHECK(v.hm3 == ref.hm3);
      CHECK(v.local.values() == ref.local.values());
      CHECK(v.pair.values() == ref.pair.values());
      CHECK(v.complement.values() == ref.complement.values());
    }
  }
}

TEST_CASE("offset invariance of the verdict") {
  for (const PrimeSet& p : prime_sets())
    for (const CoefficientRing& r : {CoefficientRing::modular(2), CoefficientRing::modular(5),
                                     CoefficientRing::integers(), CoefficientRing::rationals()}) {
      const auto a = classify(p, r);
      const auto b = classify(p, r, 2);
      CHECK(a.cm3 == b.cm3);
      CHECK(a.hm3 == b.hm3);
      CHECK(a.cond2.failures == b.cond2.failures);
      CHECK(a.cond3.failures == b.cond3.failures);
    }
}

TEST_CASE("basis names") {
  CHECK(hm_basis_name(Basis::CmImpliesHm) == "cm-implies-hm");
  CHECK(hm_basis_name(Basis::ComputedObstruction) == "computed-cohomological-obstruction");
  CHECK(hm_basis_name(Basis::PaperAsserted) == "paper-asserted");
}
