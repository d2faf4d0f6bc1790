#include "solcm/report.hpp"

#include "solcm/error.hpp"

#include <sstream>

namespace solcm {

using nlohmann::json;

json group_json(const SymbolicGroup& g) {
  switch (g.kind()) {
  case SymbolicGroup::Kind::Trivial:
    return {{"kind", "trivial"}};
  case SymbolicGroup::Kind::Fg: {
    json torsion = json::array();
    for (const Integer& d : g.fg_group().torsion())
      torsion.push_back(d.get_str());
    return {{"kind", "fg"}, {"free_rank", g.fg_group().free_rank()}, {"torsion", torsion}};
  }
  case SymbolicGroup::Kind::Rationals:
    return {{"kind", "rationals"}};
  case SymbolicGroup::Kind::LocalizedIntegers:
    return {{"kind", "localized_integers"}, {"inverted", g.inverted_primes().descriptor()}};
  case SymbolicGroup::Kind::DirectSum: {
    json parts = json::array();
    for (const SymbolicGroup& s : g.summands())
      parts.push_back(group_json(s));
    return {{"kind", "direct_sum"}, {"summands", parts}};
  }
  case SymbolicGroup::Kind::NonTrivialUnknown:
    return {{"kind", "nontrivial_unknown"}, {"reason", g.reason()}};
  case SymbolicGroup::Kind::Unknown:
    return {{"kind", "unknown"}, {"reason", g.reason()}};
  }
  return {};
}

namespace {

json degree_cell(int degree, const SymbolicGroup& g, Provenance p) {
  return {{"degree", degree},
          {"value", group_json(g)},
          {"text", g.to_string()},
          {"provenance", provenance_name(p)}};
}

json item_cell(const std::string& item, json value, const std::string& text, Provenance p) {
  return {{"item", item}, {"value", std::move(value)}, {"text", text}, {"provenance", provenance_name(p)}};
}

json table(const std::string& name, const std::string& title, json cells) {
  return {{"name", name}, {"title", title}, {"cells", std::move(cells)}};
}

json graded_table(const std::string& name, const std::string& title, const GradedGroupTable& t,
                  int top) {
  json cells = json::array();
  int last = top;
  if (!t.support().empty())
    last = std::max(last, t.support().back());
  for (int n = 0; n <= last; ++n)
    cells.push_back(degree_cell(n, t.at(n), Provenance::Computed));
  return table(name, title, std::move(cells));
}

json solenoid_table(const SolenoidTable& t) {
  json cells = json::array();
  for (const TableCell& c : t.cells)
    cells.push_back(degree_cell(c.degree, c.value, c.provenance));
  return table(t.family, t.title, std::move(cells));
}

std::string clc_text(const ClcCell& c) {
  std::string s = clc_status_name(c.status);
  if (c.provenance == Provenance::Computed)
    s += " (witness " + c.witness.to_string() + ")";
  return s;
}

json clc_table(const ClcReport& r) {
  json cells = json::array();
  for (const ClcCell& c : r.cells)
    cells.push_back({{"degree", c.degree},
                     {"value", {{"kind", "clc"},
                                {"status", clc_status_name(c.status)},
                                {"witness", group_json(c.witness)}}},
                     {"text", clc_text(c)},
                     {"provenance", provenance_name(c.provenance)}});
  return table("clc", "clc at x over " + r.ring.to_string(), std::move(cells));
}

json derivation_json(const std::string& where, const Derivation& d) {
  json towers = json::array();
  for (const TowerStep& s : d.towers)
    towers.push_back({{"label", s.label},
                      {"op", s.op},
                      {"tower", s.tower.to_string()},
                      {"result", s.result.to_string()}});
  json sequence = json::array();
  json steps = json::array();
  std::string target;
  if (d.sequence) {
    for (const SequenceTerm& t : d.sequence->terms())
      sequence.push_back(t.value ? t.label + " = " + t.value->to_string() : t.label + " = ?");
    for (const auto& [arrow, facts] : d.sequence->facts()) {
      static const char* names[] = {"zero", "mono", "epi", "iso"};
      for (ArrowFact f : facts)
        steps.push_back("given: " + d.sequence->terms()[arrow].label + " -> " +
                        d.sequence->terms()[arrow + 1].label + " is " +
                        names[static_cast<int>(f)]);
    }
    for (const RuleStep& s : d.steps)
      steps.push_back(s.to_string(*d.sequence));
    target = d.sequence->terms()[d.target].label;
  }
  return {{"cell", where}, {"towers", towers}, {"sequence", sequence},
          {"steps", steps},  {"target", target}, {"notes", d.notes}};
}

void trace_table(json& trace, const SolenoidTable& t) {
  for (const TableCell& c : t.cells)
    trace.push_back(derivation_json(t.family + " H^" + std::to_string(c.degree), c.derivation));
}

void trace_clc(json& trace, const ClcReport& r) {
  for (const ClcCell& c : r.cells)
    trace.push_back(derivation_json("clc degree " + std::to_string(c.degree), c.derivation));
}

Report solenoid_base(const std::string& command, const PrimeSet& primes,
                     const CoefficientRing& ring) {
  Report r;
  r.command = command;
  r.inputs = {{"primes", primes.descriptor()}, {"coefficients", ring.spec()}};
  for (const std::string& a : SolenoidModel::assumptions())
    r.notes.push_back("assumption: " + a);
  return r;
}

std::string ring_label(const CoefficientRing& r) { return r.to_string(); }

} // namespace

json Report::to_json(bool include_trace) const {
  json doc = {{"schema_version", kReportSchemaVersion},
              {"command", command},
              {"inputs", inputs},
              {"tables", tables},
              {"notes", notes}};
  if (include_trace)
    doc["trace"] = trace;
  return doc;
}

std::string Report::json_text(bool include_trace) const {
  return to_json(include_trace).dump(2) + "\n";
}

std::string Report::text(bool include_trace) const {
  std::ostringstream out;
  out << command << '\n';
  for (const auto& [key, value] : inputs.items())
    out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << '\n';
  for (const json& t : tables) {
    out << '\n' << t["title"].get<std::string>() << '\n';
    for (const json& c : t["cells"]) {
      const std::string key =
          c.contains("degree") ? std::to_string(c["degree"].get<int>()) : c["item"].get<std::string>();
      out << "  " << key << ": " << c["text"].get<std::string>();
      const std::string p = c["provenance"].get<std::string>();
      if (p != "computed")
        out << "  [" << p << ']';
      out << '\n';
    }
  }
  if (!notes.empty()) {
    out << "\nnotes\n";
    for (const std::string& n : notes)
      out << "  - " << n << '\n';
  }
  if (include_trace && !trace.empty()) {
    out << "\ntrace\n";
    for (const json& t : trace) {
      out << "  " << t["cell"].get<std::string>() << '\n';
      if (t.contains("lines")) {
        for (const json& l : t["lines"])
          out << "    " << l.get<std::string>() << '\n';
        continue;
      }
      for (const json& s : t["towers"])
        out << "    " << s["op"].get<std::string>() << ' ' << s["label"].get<std::string>() << " = "
            << s["result"].get<std::string>() << "   (" << s["tower"].get<std::string>() << ")\n";
      if (!t["sequence"].empty()) {
        out << "    sequence:";
        for (const json& term : t["sequence"])
          out << " [" << term.get<std::string>() << ']';
        out << '\n';
      }
      for (const json& s : t["steps"])
        out << "    " << s.get<std::string>() << '\n';
      for (const json& n : t["notes"])
        out << "    note: " << n.get<std::string>() << '\n';
    }
  }
  return out.str();
}

Report lens_report(const Integer& q, const CoefficientRing& ring) {
  const ChainComplex c = lens_complex(q);
  Report r;
  r.command = "lens";
  r.inputs = {{"q", q.get_str()}, {"coefficients", ring.spec()}};
  const std::string space = "L(" + q.get_str() + ",1)";
  const GradedGroupTable h = homology_with_coefficients(c, ring);
  r.tables.push_back(graded_table("homology", "H_n(" + space + "; " + ring_label(ring) + ")", h, 3));
  if (ring.is_field())
    r.tables.push_back(graded_table("homology_field_rank",
                                    "H_n(" + space + "; " + ring_label(ring) + ") by field rank",
                                    homology_field_rank(c, ring), 3));
  r.tables.push_back(graded_table("cohomology", "H^n(" + space + "; " + ring_label(ring) + ")",
                                  cohomology_with_coefficients(c, ring), 3));

  const GradedGroupTable z = integral_homology(c);
  json lines = json::array();
  for (int n = 0; n <= 3; ++n) {
    const FgAbGroup hn = z.at(n).is_trivial() ? FgAbGroup{} : z.at(n).fg_group();
    const FgAbGroup hm = n == 0 || z.at(n - 1).is_trivial() ? FgAbGroup{} : z.at(n - 1).fg_group();
    lines.push_back("H_" + std::to_string(n) + " = " + hn.to_string() + " (x) " + ring_label(ring) +
                    " + Tor(" + hm.to_string() + ", " + ring_label(ring) +
                    ") = " + tensor_with(hn, ring).to_string() + " + " +
                    tor_with(hm, ring).to_string());
  }
  r.trace.push_back({{"cell", "universal coefficients"}, {"lines", lines}});

  if (ring.is_modular()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), ring.modulus().get_mpz_t());
    if (g > 1)
      r.notes.push_back("degree 2 is Tor(Z_" + q.get_str() + ", " + ring_label(ring) + ") = Z_" +
                        g.get_str() + "; this differs from the printed table for Z_q coefficients, "
                        "which lists only degrees 0, 1, 3. Both computation routes give degree 2.");
  }
  return r;
}

Report suspension_report(const Integer& q, const CoefficientRing& ring) {
  const ChainComplex c = lens_complex(q);
  Report r;
  r.command = "suspend";
  r.inputs = {{"q", q.get_str()}, {"coefficients", ring.spec()}};
  const std::string space = "L(" + q.get_str() + ",1)";
  const GradedGroupTable h = homology_with_coefficients(c, ring);
  r.tables.push_back(graded_table("lens_homology", "H_n(" + space + "; " + ring_label(ring) + ")", h, 3));
  r.tables.push_back(graded_table("suspension_homology",
                                  "H_n(S" + space + "; " + ring_label(ring) + ")",
                                  suspension_homology(h, ring), 4));
  r.notes.push_back("reduced homology shifts up by one; degree 0 is the coefficient ring");
  return r;
}

Report local_report(const PrimeSet& primes, const CoefficientRing& ring) {
  Report r = solenoid_base("local", primes, ring);
  const SolenoidTable t = local_cohomology_at_wild_point(SolenoidModel(primes), ring);
  r.tables.push_back(solenoid_table(t));
  r.notes.push_back("degrees above 3 vanish: S3/X is 3-dimensional");
  trace_table(r.trace, t);
  return r;
}

Report complement_report(const PrimeSet& primes, const CoefficientRing& ring) {
  Report r = solenoid_base("complement", primes, ring);
  const SolenoidTable t = complement_cohomology(SolenoidModel(primes), ring);
  r.tables.push_back(solenoid_table(t));
  trace_table(r.trace, t);
  return r;
}

Report pair_report(const PrimeSet& primes, const CoefficientRing& ring) {
  Report r = solenoid_base("pair", primes, ring);
  const SolenoidTable t = quotient_pair_cohomology(SolenoidModel(primes), ring);
  r.tables.push_back(solenoid_table(t));
  trace_table(r.trace, t);
  return r;
}

Report clc_report_document(const PrimeSet& primes, const CoefficientRing& ring) {
  Report r = solenoid_base("clc", primes, ring);
  const ClcReport c = clc_report(SolenoidModel(primes), ring);
  r.tables.push_back(clc_table(c));
  trace_clc(r.trace, c);
  return r;
}

Report classify_report(const PrimeSet& primes, const CoefficientRing& ring) {
  const ClassificationVerdict v = classify(primes, ring);
  Report r = solenoid_base("classify", primes, ring);
  const auto holds = [](bool b) { return std::string(b ? "holds" : "fails"); };
  const auto cond = [&](const char* name, const ConditionCheck& c) {
    std::string text = holds(c.holds);
    if (!c.failures.empty()) {
      text += ":";
      for (std::size_t i = 0; i < c.failures.size(); ++i)
        text += (i ? "; " : " ") + c.failures[i];
    }
    return item_cell(name, {{"holds", c.holds}, {"failures", c.failures}}, text, c.provenance);
  };
  json items = json::array();
  items.push_back(cond("cond1", v.cond1));
  items.push_back(cond("cond2", v.cond2));
  items.push_back(cond("cond3", v.cond3));
  items.push_back(item_cell("cm3", {{"holds", v.cm3}, {"reasons", v.cm3_reasons}}, holds(v.cm3),
                            Provenance::Computed));
  items.push_back(item_cell("hm3", {{"holds", v.hm3}, {"basis", hm_basis_name(v.hm3_basis)}},
                            holds(v.hm3) + " (" + hm_basis_name(v.hm3_basis) + ")",
                            v.hm3_provenance));
  items.push_back(item_cell("beyond_paper", v.beyond_paper,
                            v.beyond_paper ? "yes: composite modulus, classified by factoring" : "no",
                            Provenance::Computed));
  r.tables.push_back(table("verdict", "S3/X as a cohomology 3-manifold over " + ring_label(ring),
                           std::move(items)));
  r.tables.push_back(solenoid_table(v.local));
  r.tables.push_back(solenoid_table(v.pair));
  r.tables.push_back(clc_table(v.clc));
  trace_table(r.trace, v.local);
  trace_table(r.trace, v.complement);
  trace_table(r.trace, v.pair);
  trace_clc(r.trace, v.clc);
  if (!v.hm3)
    r.notes.push_back("the homology-manifold negative is not derived from Borel-Moore homology; "
                      "the computed obstruction is cohomological");
  return r;
}

Report tower_report(TowerOp op, const CoefficientRing& base, const PrimeSet& primes,
                    std::size_t depth) {
  const MultiplierSequence n = MultiplierSequence::from_primes(primes);
  const Direction dir = op == TowerOp::Colim ? Direction::Direct : Direction::Inverse;
  const Tower t = Tower::multiplication(dir, base, n);
  static const char* names[] = {"lim", "lim1", "colim"};
  const std::string name = names[static_cast<int>(op)];

  Report r;
  r.command = "tower";
  r.inputs = {{"op", name}, {"base", base.spec()}, {"primes", primes.descriptor()},
              {"depth", depth}};
  json items = json::array();
  const SymbolicGroup result = op == TowerOp::Lim     ? lim(t)
                               : op == TowerOp::LimOne ? lim_one(t)
                                                       : colim(t);
  items.push_back(item_cell(name, group_json(result), result.to_string(), Provenance::Computed));
  if (dir == Direction::Inverse) {
    const MittagLeffler ml = mittag_leffler(t);
    items.push_back(item_cell("mittag_leffler", ml.to_string(), ml.to_string(), Provenance::Computed));
  }
  r.tables.push_back(table("tower", t.to_string(), std::move(items)));

  // The facts about n(i) that the symbolic rules consult.
  json lines = json::array();
  std::string first;
  for (std::size_t i = 1; i <= 4; ++i)
    first += (i > 1 ? ", " : "") + n.at(i).get_str();
  lines.push_back("n(1..4) = " + first + (n.mode() == MultiplierSequence::Mode::PartialProducts
                                               ? ", ... (partial products)"
                                               : ", ... (constant)"));
  lines.push_back(std::string("n(i) > 1 infinitely often: ") +
                  (n.exceeds_one_infinitely_often() ? "yes" : "no"));
  if (base.is_modular())
    lines.push_back("m with the primes dividing some n(i) removed: " +
                    n.strip_support(base.modulus()).get_str());
  r.trace.push_back({{"cell", name}, {"lines", lines}});

  if (dir == Direction::Inverse && !base.is_rationals()) {
    const TruncatedLimits o = truncated_limits_oracle(t, depth);
    json cells = json::array();
    cells.push_back(item_cell("lim_approx", group_json(o.lim_approx), o.lim_approx.to_string(),
                              Provenance::Computed));
    cells.push_back(item_cell("lim1_approx", group_json(o.lim1_approx), o.lim1_approx.to_string(),
                              Provenance::Computed));
    cells.push_back(item_cell("stabilized", o.stabilized, o.stabilized ? "yes" : "no",
                              Provenance::Computed));
    r.tables.push_back(table("oracle", "truncated oracle at depth " + std::to_string(depth),
                             std::move(cells)));
    r.notes.push_back("the oracle is a finite-depth approximation; the symbolic value is authoritative");
  }
  if (op == TowerOp::LimOne && result.kind() == SymbolicGroup::Kind::NonTrivialUnknown)
    r.notes.push_back("nonzero lim1 follows from the failure of Mittag-Leffler on a tower of "
                      "finitely generated groups (Gray)");
  return r;
}

} // namespace solcm
