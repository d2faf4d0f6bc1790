#include "solcm/solenoid.hpp"

#include "solcm/error.hpp"

#include <algorithm>

namespace solcm {

SolenoidModel::SolenoidModel(const PrimeSet& primes, std::size_t offset)
    : primes_(primes), multipliers_(MultiplierSequence::from_primes(primes)), offset_(offset) {}

const std::vector<std::string>& SolenoidModel::assumptions() {
  static const std::vector<std::string> list = {
      "H*(S3; R) = R, 0, 0, R in degrees 0..3",
      "the closed solid tori closure(U_i) are homotopy equivalent to S1",
      "the complements S3 - U_i are homotopy equivalent to S1",
      "restriction on H1 of the solid tori and of their complements is multiplication by n(i)",
      "H0 towers are constant with identity bonds (every space involved is connected)",
      "S3/X is compact, metrizable, locally connected and 3-dimensional",
      "H^n(S3/X) = H^n(S3/X, {x}) for n >= 1 (reduced cohomology)",
      "along the clc ladder H0(X) enters reduced (X is connected) and H1(U_i, X) is identified "
      "with H1(U_i) = R, bonds x n(i)",
  };
  return list;
}

std::string provenance_name(Provenance p) {
  switch (p) {
  case Provenance::Computed:
    return "computed";
  case Provenance::ModelAssumption:
    return "model-assumption";
  case Provenance::PaperAsserted:
    return "paper-asserted";
  }
  return {};
}

std::string clc_status_name(ClcCell::Status s) {
  switch (s) {
  case ClcCell::Status::Holds:
    return "holds";
  case ClcCell::Status::Fails:
    return "fails";
  case ClcCell::Status::Undetermined:
    return "undetermined";
  }
  return {};
}

const TableCell& SolenoidTable::at(int degree) const {
  for (const TableCell& c : cells)
    if (c.degree == degree)
      return c;
  throw InvalidArgument(family + " table has no degree " + std::to_string(degree));
}

std::vector<SymbolicGroup> SolenoidTable::values() const {
  std::vector<SymbolicGroup> out;
  for (const TableCell& c : cells)
    out.push_back(c.value);
  return out;
}

bool ClcReport::all_hold() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const ClcCell& c) { return c.status == ClcCell::Status::Holds; });
}

SymbolicGroup verdict_value(const TermVerdict& v) {
  switch (v.kind) {
  case TermVerdict::Kind::Determined:
    return v.value;
  case TermVerdict::Kind::NonTrivial:
    return SymbolicGroup::nontrivial_unknown("deduced-nonzero");
  case TermVerdict::Kind::Undetermined:
    return SymbolicGroup::unknown("undetermined");
  }
  return {};
}

namespace {

using Facts = std::map<std::size_t, std::vector<ArrowFact>>;

SequenceTerm known(const std::string& label, const SymbolicGroup& g) {
  return SequenceTerm::known(label, g);
}

std::string deg(const char* prefix, int n, const char* space) {
  return std::string(prefix) + std::to_string(n) + "(" + space + ")";
}

Derivation run(ExactSequence seq, std::size_t target) {
  Deduction d = deduce(seq);
  Derivation out;
  out.steps = std::move(d.steps);
  out.sequence = std::move(seq);
  out.target = target;
  return out;
}

SymbolicGroup target_value(const Derivation& d) {
  return verdict_value(replay(*d.sequence, d.steps)[d.target]);
}

SymbolicGroup level_group(const Tower& t) {
  const auto& d = t.description();
  if (const auto* m = std::get_if<MultiplicationTower>(&d))
    return ring_group(m->base);
  if (const auto* c = std::get_if<ConstantTower>(&d))
    return c->group;
  return SymbolicGroup::fg(std::get<ExplicitTower>(d).levels.front());
}

SymbolicGroup apply_op(const std::string& op, const Tower& t) {
  if (op == "colim")
    return colim(t);
  if (op == "lim")
    return lim(t);
  if (op == "lim1")
    return lim_one(t);
  throw InvalidArgument("unknown tower operation " + op);
}

TowerStep tower_step(std::string label, std::string op, Tower t) {
  SymbolicGroup result = apply_op(op, t);
  return {std::move(label), std::move(op), std::move(t), std::move(result)};
}

// H^k(S3 - U_i; R) as an inverse tower.
Tower complement_tower(const SolenoidModel& m, const CoefficientRing& r, int k) {
  if (k == 0)
    return Tower::constant(Direction::Inverse, ring_group(r));
  if (k == 1)
    return Tower::multiplication(Direction::Inverse, r, m.multipliers(), m.offset());
  return Tower::constant(Direction::Inverse, SymbolicGroup::trivial());
}

bool replay_derivation(const Derivation& d, const SymbolicGroup& value) {
  for (const TowerStep& s : d.towers)
    if (!(apply_op(s.op, s.tower) == s.result))
      return false;
  if (d.value_from_tower) {
    if (d.towers.empty() || !(d.towers.back().result == value))
      return false;
    return !d.sequence || level_group(d.towers.back().tower) == target_value(d);
  }
  return d.sequence && target_value(d) == value;
}

} // namespace

Derivation pair_level(const SolenoidModel&, const CoefficientRing& r, int degree) {
  const SymbolicGroup R = ring_group(r);
  const SymbolicGroup Z0 = SymbolicGroup::trivial();
  const char* pair = "S3,U_i";
  switch (degree) {
  case 0:
    return run(ExactSequence({known("0", Z0), SequenceTerm::unknown(deg("H", 0, pair)),
                              known("H0(S3)", R), known("H0(U_i)", R)},
                             Facts{{2, {ArrowFact::IsIso}}}),
               1);
  case 1:
    return run(ExactSequence({known("H0(S3)", R), known("H0(U_i)", R),
                              SequenceTerm::unknown(deg("H", 1, pair)), known("H1(S3)", Z0),
                              known("H1(U_i)", R)},
                             Facts{{0, {ArrowFact::IsIso}}}),
               2);
  case 2:
    return run(ExactSequence({known("H1(S3)", Z0), known("H1(U_i)", R),
                              SequenceTerm::unknown(deg("H", 2, pair)), known("H2(S3)", Z0),
                              known("H2(U_i)", Z0)}),
               2);
  case 3:
    return run(ExactSequence({known("H2(U_i)", Z0), SequenceTerm::unknown(deg("H", 3, pair)),
                              known("H3(S3)", R), known("H3(U_i)", Z0)}),
               1);
  case 4:
    return run(ExactSequence({known("H3(S3)", R), known("H3(U_i)", Z0),
                              SequenceTerm::unknown(deg("H", 4, pair)), known("H4(S3)", Z0)}),
               2);
  default:
    throw InvalidArgument("pair_tower: degree must be in 0..4, got " + std::to_string(degree));
  }
}

Tower pair_tower(const SolenoidModel& m, const CoefficientRing& r, int degree) {
  const Derivation d = pair_level(m, r, degree);
  const SymbolicGroup level = target_value(d);
  if (!level.is_identified())
    throw InconsistencyError("pair sequence in degree " + std::to_string(degree) +
                             " does not identify its middle term");
  if (degree == 2) {
    if (!(level == ring_group(r)))
      throw InconsistencyError("degree-2 pair level is " + level.to_string() + ", expected " +
                               ring_group(r).to_string());
    // The bonds come from H1(U_i) -> H1(U_{i+1}), multiplication by n(i).
    return Tower::multiplication(Direction::Direct, r, m.multipliers(), m.offset());
  }
  return Tower::constant(Direction::Direct, level);
}

SolenoidTable local_cohomology_at_wild_point(const SolenoidModel& m, const CoefficientRing& r) {
  SolenoidTable t{"local", "H^n(S3/X, {x}; " + r.to_string() + ")", r, {}};
  for (int n = 0; n <= 3; ++n) {
    TableCell c;
    c.degree = n;
    c.derivation = pair_level(m, r, n);
    c.derivation.towers.push_back(tower_step(deg("H", n, "S3,U_i"), "colim", pair_tower(m, r, n)));
    c.derivation.value_from_tower = true;
    c.derivation.notes.push_back("continuity and excision: colimit over the neighbourhoods U_i/X");
    c.value = c.derivation.towers.back().result;
    t.cells.push_back(std::move(c));
  }
  return t;
}

SolenoidTable complement_cohomology(const SolenoidModel& m, const CoefficientRing& r) {
  SolenoidTable t{"complement", "H^n(S3 - X; " + r.to_string() + ")", r, {}};
  for (int n = 1; n <= 3; ++n) {
    TowerStep one = tower_step(deg("H", n - 1, "S3-U_i"), "lim1", complement_tower(m, r, n - 1));
    TowerStep zero = tower_step(deg("H", n, "S3-U_i"), "lim", complement_tower(m, r, n));
    TableCell c;
    c.degree = n;
    c.derivation = run(ExactSequence({known("0", SymbolicGroup::trivial()),
                                      known("lim1 " + one.label, one.result),
                                      SequenceTerm::unknown(deg("H", n, "S3-X")),
                                      known("lim " + zero.label, zero.result),
                                      known("0", SymbolicGroup::trivial())}),
                       2);
    c.derivation.towers = {std::move(one), std::move(zero)};
    c.derivation.notes.push_back("Milnor sequence for the increasing union of the S3 - U_i");
    c.value = target_value(c.derivation);
    t.cells.push_back(std::move(c));
  }
  return t;
}

SolenoidTable quotient_pair_cohomology(const SolenoidModel& m, const CoefficientRing& r) {
  const SolenoidTable local = local_cohomology_at_wild_point(m, r);
  const SolenoidTable comp = complement_cohomology(m, r);
  const SymbolicGroup R = ring_group(r);

  std::vector<SequenceTerm> terms = {known("H0(S3/X)", R), known("H0(S3-X)", R)};
  for (int n = 1; n <= 3; ++n) {
    terms.push_back(SequenceTerm::unknown(deg("H", n, "S3/X,S3-X")));
    terms.push_back(known(deg("H", n, "S3/X"), local.at(n).value));
    terms.push_back(known(deg("H", n, "S3-X"), comp.at(n).value));
  }
  const ExactSequence seq(std::move(terms), Facts{{0, {ArrowFact::IsIso}}});
  const Deduction d = deduce(seq);

  SolenoidTable t{"pair", "H^n(S3/X, S3 - X; " + r.to_string() + ")", r, {}};
  for (int n = 1; n <= 3; ++n) {
    TableCell c;
    c.degree = n;
    c.derivation.sequence = seq;
    c.derivation.steps = d.steps;
    c.derivation.target = static_cast<std::size_t>(3 * n - 1);
    c.derivation.notes.push_back("long exact sequence of the pair; S3/X minus x is S3 - X");
    c.value = verdict_value(d.verdicts[c.derivation.target]);
    t.cells.push_back(std::move(c));
  }
  return t;
}

ClcReport clc_report(const SolenoidModel& m, const CoefficientRing& r) {
  using Status = ClcCell::Status;
  const SymbolicGroup R = ring_group(r);
  const auto status_of = [](const SymbolicGroup& g) {
    if (g.is_trivial())
      return Status::Holds;
    return g.is_nontrivial() ? Status::Fails : Status::Undetermined;
  };
  ClcReport out{r, {}};

  ClcCell c0;
  c0.degree = 0;
  c0.status = Status::Holds;
  c0.provenance = Provenance::ModelAssumption;
  c0.derivation.notes.push_back("S3/X is locally connected");
  out.cells.push_back(std::move(c0));

  // Degree 1: the ladder bonds H1(U_i, X) -> H1(U_{i+1}, X) act as x n(i)
  // on R; they are eventually zero on each element iff the colimit vanishes.
  const Tower ladder = Tower::multiplication(Direction::Direct, r, m.multipliers(), m.offset());
  ClcCell c1;
  c1.degree = 1;
  c1.derivation.towers.push_back(tower_step("H1(U_i,X)", "colim", ladder));
  c1.witness = c1.derivation.towers.back().result;
  c1.status = status_of(c1.witness);
  if (r.is_integers())
    c1.derivation.notes.push_back("bonds are injective on Z, never eventually zero");
  out.cells.push_back(std::move(c1));

  // Degree 2: H1(U_i) -> H1(X) -> H2(U_i, X) -> H2(U_i) = 0, with H1(X) the
  // colimit of R under x n(i). Over a finite base or Q the first map is onto.
  ClcCell c2;
  c2.degree = 2;
  TowerStep h1x = tower_step("H1(X)", "colim", ladder);
  Facts facts;
  if (!r.is_integers())
    facts[0] = {ArrowFact::IsEpi};
  else
    facts[0] = {ArrowFact::IsMono};
  c2.derivation = run(ExactSequence({known("H1(U_i)", R), known("H1(X)", h1x.result),
                                     SequenceTerm::unknown("H2(U_i,X)"),
                                     known("H2(U_i)", SymbolicGroup::trivial())},
                                    facts),
                      2);
  c2.derivation.towers.push_back(std::move(h1x));
  c2.witness = target_value(c2.derivation);
  c2.status = status_of(c2.witness);
  out.cells.push_back(std::move(c2));

  // Degree 3: X is 1-dimensional and U_i is a circle up to homotopy.
  ClcCell c3;
  c3.degree = 3;
  c3.derivation = run(ExactSequence({known("H2(X)", SymbolicGroup::trivial()),
                                     SequenceTerm::unknown("H3(U_i,X)"),
                                     known("H3(U_i)", SymbolicGroup::trivial())}),
                      1);
  c3.witness = target_value(c3.derivation);
  c3.status = status_of(c3.witness);
  out.cells.push_back(std::move(c3));
  return out;
}

bool replay_cell(const TableCell& c) {
  try {
    return replay_derivation(c.derivation, c.value);
  } catch (const InconsistencyError&) {
    return false;
  }
}

bool replay_clc(const ClcCell& c) {
  if (c.provenance == Provenance::ModelAssumption)
    return c.status == ClcCell::Status::Holds && c.derivation.towers.empty() &&
           !c.derivation.sequence;
  try {
    for (const TowerStep& s : c.derivation.towers)
      if (!(apply_op(s.op, s.tower) == s.result))
        return false;
    const SymbolicGroup w = c.derivation.sequence ? target_value(c.derivation)
                                                  : c.derivation.towers.back().result;
    if (!(w == c.witness))
      return false;
    const ClcCell::Status expected = w.is_trivial()      ? ClcCell::Status::Holds
                                     : w.is_nontrivial() ? ClcCell::Status::Fails
                                                         : ClcCell::Status::Undetermined;
    return expected == c.status;
  } catch (const InconsistencyError&) {
    return false;
  }
}

} // namespace solcm
