#include "solcm/report.hpp"

#include <doctest.h>

using namespace solcm;
using nlohmann::json;

namespace {

std::vector<Report> sample_reports() {
  const PrimeSet p23 = PrimeSet::finite({2, 3});
  const auto z5 = CoefficientRing::modular(5);
  return {lens_report(5, CoefficientRing::integers()),
          lens_report(5, z5),
          suspension_report(5, CoefficientRing::integers()),
          local_report(p23, z5),
          complement_report(PrimeSet::all(), CoefficientRing::integers()),
          pair_report(p23, CoefficientRing::rationals()),
          clc_report_document(p23, CoefficientRing::integers()),
          classify_report(p23, z5),
          classify_report(PrimeSet::all_except({2}), CoefficientRing::modular(6)),
          tower_report(TowerOp::Lim, CoefficientRing::integers(), PrimeSet::finite({2}), 16),
          tower_report(TowerOp::Colim, CoefficientRing::rationals(), PrimeSet::all(), 16)};
}

} // namespace

TEST_CASE("group values in JSON") {
  CHECK(group_json(SymbolicGroup::trivial()) == json{{"kind", "trivial"}});
  const json z12 = group_json(SymbolicGroup::fg(FgAbGroup::from_orders(1, std::vector<Integer>{12})));
  CHECK(z12["kind"] == "fg");
  CHECK(z12["free_rank"] == 1);
  CHECK(z12["torsion"] == json::array({"12"}));
  const json loc = group_json(SymbolicGroup::localized_integers(PrimeSet::finite({2, 3})));
  CHECK(loc["kind"] == "localized_integers");
  CHECK(group_json(SymbolicGroup::nontrivial_unknown("x"))["reason"] == "x");
}

TEST_CASE("every cell carries a provenance tag and a value") {
  for (const Report& r : sample_reports()) {
    const json j = r.to_json(true);
    CHECK(j["schema_version"] == kReportSchemaVersion);
    for (const json& t : j["tables"])
      for (const json& c : t["cells"]) {
        CHECK(c.contains("value"));
        CHECK(c.contains("text"));
        REQUIRE(c.contains("provenance"));
        const std::string p = c["provenance"];
        CHECK((p == "computed" || p == "model-assumption" || p == "paper-asserted"));
        CHECK((c.contains("degree") != c.contains("item")));
      }
  }
}

TEST_CASE("JSON is deterministic and round-trips") {
  const auto a = sample_reports();
  const auto b = sample_reports();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (bool trace : {false, true}) {
      const std::string text = a[i].json_text(trace);
      CHECK(text == b[i].json_text(trace));
      CHECK(json::parse(text).dump(2) + "\n" == text);
      CHECK(a[i].text(trace) == b[i].text(trace));
    }
}

TEST_CASE("traces appear only on request") {
  const Report r = classify_report(PrimeSet::finite({2, 3}), CoefficientRing::modular(5));
  CHECK_FALSE(r.to_json(false).contains("trace"));
  CHECK_FALSE(r.to_json(true)["trace"].empty());
  CHECK(r.text(true).size() > r.text(false).size());
}

TEST_CASE("the mod-q lens report records the divergence") {
  const Report r = lens_report(5, CoefficientRing::modular(5));
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes.front().find("degrees 0, 1, 3") != std::string::npos);
  CHECK(lens_report(5, CoefficientRing::modular(3)).notes.empty());
}

TEST_CASE("tower reports trace the multiplier facts") {
  const Report r = tower_report(TowerOp::Lim, CoefficientRing::modular(12), PrimeSet::finite({2}), 8);
  const json t = r.to_json(true)["trace"];
  REQUIRE(t.size() == 1);
  const json lines = t[0]["lines"];
  CHECK(lines[0] == "n(1..4) = 2, 2, 2, 2, ... (constant)");
  CHECK(lines[1] == "n(i) > 1 infinitely often: yes");
  CHECK(lines[2] == "m with the primes dividing some n(i) removed: 3");
}
