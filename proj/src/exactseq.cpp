#include "solcm/exactseq.hpp"

#include "solcm/error.hpp"

#include <algorithm>

namespace solcm {

ExactSequence::ExactSequence(std::vector<SequenceTerm> terms,
                             std::map<std::size_t, std::vector<ArrowFact>> facts)
    : terms_(std::move(terms)), facts_(std::move(facts)) {
  if (terms_.size() < 3)
    throw InvalidArgument("exact sequence needs at least 3 terms");
  for (const auto& [arrow, list] : facts_)
    if (arrow + 1 >= terms_.size())
      throw InvalidArgument("annotation on arrow " + std::to_string(arrow) +
                            ", which does not exist");
}

std::string rule_name(Rule r) { return "R" + std::to_string(static_cast<int>(r)); }

namespace {

struct State {
  std::vector<std::optional<SymbolicGroup>> value; // identified values only
  std::vector<bool> nonzero;
  std::vector<bool> zero, mono, epi;

  std::size_t terms() const { return value.size(); }
  bool trivial(std::size_t j) const { return value[j] && value[j]->is_trivial(); }
  bool nontrivial(std::size_t j) const {
    return nonzero[j] || (value[j] && value[j]->is_nontrivial());
  }
  bool iso(std::size_t a) const { return mono[a] && epi[a]; }
};

const std::string& label(const ExactSequence& s, std::size_t j) { return s.terms()[j].label; }

void check_consistency(const State& st, const ExactSequence& s) {
  for (std::size_t j = 0; j < st.terms(); ++j)
    if (st.trivial(j) && st.nonzero[j])
      throw InconsistencyError("term " + label(s, j) + " is both zero and nonzero");
  for (std::size_t a = 0; a + 1 < st.terms(); ++a) {
    if (st.zero[a] && st.mono[a] && st.nontrivial(a))
      throw InconsistencyError("arrow out of nonzero " + label(s, a) + " is zero and mono");
    if (st.zero[a] && st.epi[a] && st.nontrivial(a + 1))
      throw InconsistencyError("arrow onto nonzero " + label(s, a + 1) + " is zero and epi");
  }
}

State initial_state(const ExactSequence& s) {
  const std::size_t n = s.size();
  State st{std::vector<std::optional<SymbolicGroup>>(n), std::vector<bool>(n),
           std::vector<bool>(n - 1), std::vector<bool>(n - 1), std::vector<bool>(n - 1)};
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = s.terms()[j].value;
    if (!v)
      continue;
    if (v->is_identified())
      st.value[j] = *v;
    else if (v->is_nontrivial())
      st.nonzero[j] = true;
  }
  for (const auto& [a, list] : s.facts())
    for (ArrowFact f : list) {
      if (f == ArrowFact::IsZero)
        st.zero[a] = true;
      if (f == ArrowFact::IsMono || f == ArrowFact::IsIso)
        st.mono[a] = true;
      if (f == ArrowFact::IsEpi || f == ArrowFact::IsIso)
        st.epi[a] = true;
    }
  check_consistency(st, s);
  return st;
}

// Returns whether anything changed.
bool apply(State& st, const ExactSequence& s, std::size_t index, const Conclusion& c) {
  auto set = [](std::vector<bool>& v, std::size_t i) {
    if (v[i])
      return false;
    v[i] = true;
    return true;
  };
  bool changed = false;
  switch (c.kind) {
  case Conclusion::Kind::ArrowZero:
    changed = set(st.zero, index);
    break;
  case Conclusion::Kind::ArrowMono:
    changed = set(st.mono, index);
    break;
  case Conclusion::Kind::ArrowEpi:
    changed = set(st.epi, index);
    break;
  case Conclusion::Kind::TermNonTrivial:
    changed = !st.nontrivial(index);
    st.nonzero[index] = true;
    break;
  case Conclusion::Kind::TermValue:
    if (st.value[index]) {
      if (!(*st.value[index] == c.value))
        throw InconsistencyError("term " + label(s, index) + " deduced as " + c.value.to_string() +
                                 " but known to be " + st.value[index]->to_string());
    } else {
      st.value[index] = c.value;
      changed = true;
    }
    break;
  }
  if (changed)
    check_consistency(st, s);
  return changed;
}

using Derived = std::vector<std::pair<Rule, Conclusion>>;

Conclusion arrow(Conclusion::Kind k) { return {k, {}}; }
Conclusion term_value(const SymbolicGroup& g) { return {Conclusion::Kind::TermValue, g}; }

Derived arrow_rules(const State& st, std::size_t a) {
  using K = Conclusion::Kind;
  Derived out;
  const std::size_t n = st.terms();
  if (st.trivial(a)) {
    out.push_back({Rule::R0, arrow(K::ArrowZero)});
    out.push_back({Rule::R0, arrow(K::ArrowMono)});
  }
  if (st.trivial(a + 1)) {
    out.push_back({Rule::R0, arrow(K::ArrowZero)});
    out.push_back({Rule::R0, arrow(K::ArrowEpi)});
  }
  // Exactness at the target T_{a+1}, arrow a coming in.
  if (a + 2 < n) {
    if (st.zero[a + 1])
      out.push_back({Rule::R4, arrow(K::ArrowEpi)});
    if (st.mono[a + 1])
      out.push_back({Rule::R4, arrow(K::ArrowZero)});
  }
  // Exactness at the source T_a, arrow a going out.
  if (a >= 1) {
    if (st.epi[a - 1])
      out.push_back({Rule::R4, arrow(K::ArrowZero)});
    if (st.zero[a - 1])
      out.push_back({Rule::R4, arrow(K::ArrowMono)});
  }
  return out;
}

Derived term_rules(const State& st, std::size_t j) {
  Derived out;
  const std::size_t n = st.terms();
  const bool has_in = j >= 1;
  const bool has_out = j + 1 < n;
  const bool interior = has_in && has_out;

  if (interior && st.trivial(j - 1) && st.trivial(j + 1))
    out.push_back({Rule::R1, term_value(SymbolicGroup::trivial())});

  if ((interior && st.zero[j - 1] && st.zero[j]) ||
      (has_out && st.zero[j] && st.mono[j]) || (has_in && st.zero[j - 1] && st.epi[j - 1]))
    out.push_back({Rule::R3, term_value(SymbolicGroup::trivial())});

  if (has_in && st.iso(j - 1) && st.value[j - 1])
    out.push_back({Rule::R2, term_value(*st.value[j - 1])});
  if (has_out && st.iso(j) && st.value[j + 1])
    out.push_back({Rule::R2, term_value(*st.value[j + 1])});

  if (interior && st.mono[j - 1] && st.epi[j] && st.value[j - 1] && st.value[j + 1] &&
      st.value[j + 1]->is_free_fg())
    out.push_back({Rule::R6, term_value(SymbolicGroup::direct_sum({*st.value[j - 1], *st.value[j + 1]}))});

  if ((has_in && st.mono[j - 1] && st.nontrivial(j - 1)) ||
      (has_out && st.epi[j] && st.nontrivial(j + 1)))
    out.push_back({Rule::R5, {Conclusion::Kind::TermNonTrivial, {}}});
  return out;
}

std::vector<TermVerdict> verdicts(const State& st, const ExactSequence& s) {
  std::vector<TermVerdict> out;
  for (std::size_t j = 0; j < st.terms(); ++j) {
    TermVerdict v;
    v.given = s.terms()[j].value.has_value();
    if (st.value[j]) {
      v.kind = TermVerdict::Kind::Determined;
      v.value = *st.value[j];
    } else if (st.nontrivial(j)) {
      v.kind = TermVerdict::Kind::NonTrivial;
    }
    out.push_back(v);
  }
  return out;
}

} // namespace

std::string RuleStep::to_string(const ExactSequence& s) const {
  std::string what;
  switch (conclusion.kind) {
  case Conclusion::Kind::ArrowZero:
  case Conclusion::Kind::ArrowMono:
  case Conclusion::Kind::ArrowEpi: {
    static const char* names[] = {"zero", "mono", "epi"};
    what = label(s, index) + " -> " + label(s, index + 1) + " is " +
           names[static_cast<int>(conclusion.kind)];
    break;
  }
  case Conclusion::Kind::TermNonTrivial:
    what = label(s, index) + " is nonzero";
    break;
  case Conclusion::Kind::TermValue:
    what = label(s, index) + " = " + conclusion.value.to_string();
    break;
  }
  return rule_name(rule) + ": " + what;
}

std::string TermVerdict::to_string() const {
  switch (kind) {
  case Kind::Determined:
    return value.to_string();
  case Kind::NonTrivial:
    return "nonzero";
  case Kind::Undetermined:
    return "undetermined";
  }
  return {};
}

Deduction deduce(const ExactSequence& s) {
  State st = initial_state(s);
  Deduction d;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a + 1 < st.terms(); ++a)
      for (const auto& [rule, c] : arrow_rules(st, a))
        if (apply(st, s, a, c)) {
          d.steps.push_back({rule, a, c});
          changed = true;
        }
    for (std::size_t j = 0; j < st.terms(); ++j)
      for (const auto& [rule, c] : term_rules(st, j))
        if (apply(st, s, j, c)) {
          d.steps.push_back({rule, j, c});
          changed = true;
        }
  }
  d.verdicts = verdicts(st, s);
  return d;
}

std::vector<TermVerdict> replay(const ExactSequence& s, const std::vector<RuleStep>& steps) {
  State st = initial_state(s);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const RuleStep& step = steps[k];
    const std::size_t limit = step.about_arrow() ? st.terms() - 1 : st.terms();
    if (step.index >= limit)
      throw InconsistencyError("replay: step " + std::to_string(k) + " points outside the sequence");
    const Derived available = step.about_arrow() ? arrow_rules(st, step.index)
                                                 : term_rules(st, step.index);
    const bool follows = std::any_of(available.begin(), available.end(), [&](const auto& d) {
      return d.first == step.rule && d.second == step.conclusion;
    });
    if (!follows)
      throw InconsistencyError("replay: step " + std::to_string(k) + " (" + step.to_string(s) +
                               ") does not follow");
    apply(st, s, step.index, step.conclusion);
  }
  return verdicts(st, s);
}

} // namespace solcm
