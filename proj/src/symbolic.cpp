#include "solcm/symbolic.hpp"

#include "solcm/error.hpp"

#include <algorithm>
#include <sstream>

namespace solcm {

SymbolicGroup SymbolicGroup::fg(const FgAbGroup& g) {
  SymbolicGroup s;
  if (g.is_trivial())
    return s;
  s.kind_ = Kind::Fg;
  s.fg_ = g;
  return s;
}

SymbolicGroup SymbolicGroup::rationals() {
  SymbolicGroup s;
  s.kind_ = Kind::Rationals;
  return s;
}

SymbolicGroup SymbolicGroup::localized_integers(const PrimeSet& inverted) {
  if (inverted.kind() == PrimeSet::Kind::All)
    return rationals();
  SymbolicGroup s;
  s.kind_ = Kind::LocalizedIntegers;
  s.inverted_ = inverted;
  return s;
}

SymbolicGroup SymbolicGroup::nontrivial_unknown(std::string reason) {
  if (reason.empty())
    throw InvalidArgument("NonTrivialUnknown requires a reason code");
  SymbolicGroup s;
  s.kind_ = Kind::NonTrivialUnknown;
  s.reason_ = std::move(reason);
  return s;
}

SymbolicGroup SymbolicGroup::unknown(std::string reason) {
  SymbolicGroup s;
  s.kind_ = Kind::Unknown;
  s.reason_ = std::move(reason);
  return s;
}

SymbolicGroup SymbolicGroup::direct_sum(const std::vector<SymbolicGroup>& parts) {
  FgAbGroup fg_part;
  std::vector<SymbolicGroup> rest;
  bool saw_unknown = false;
  bool saw_nontrivial_unknown = false;

  auto absorb = [&](const SymbolicGroup& g, auto& self) -> void {
    switch (g.kind_) {
    case Kind::Trivial:
      break;
    case Kind::Fg:
      fg_part = fg_part + g.fg_;
      break;
    case Kind::Rationals:
    case Kind::LocalizedIntegers:
      rest.push_back(g);
      break;
    case Kind::DirectSum:
      for (const SymbolicGroup& p : g.parts_)
        self(p, self);
      break;
    case Kind::NonTrivialUnknown:
      saw_nontrivial_unknown = true;
      break;
    case Kind::Unknown:
      saw_unknown = true;
      break;
    }
  };
  for (const SymbolicGroup& p : parts)
    absorb(p, absorb);

  const bool any_identified_nonzero = !fg_part.is_trivial() || !rest.empty();
  if (saw_nontrivial_unknown || (saw_unknown && any_identified_nonzero))
    return nontrivial_unknown("summand-not-identified");
  if (saw_unknown)
    return unknown("summand-not-identified");

  std::stable_sort(rest.begin(), rest.end(), [](const SymbolicGroup& a, const SymbolicGroup& b) {
    if (a.kind_ != b.kind_)
      return a.kind_ == Kind::Rationals;
    if (a.kind_ == Kind::LocalizedIntegers)
      return a.inverted_->descriptor() < b.inverted_->descriptor();
    return false;
  });

  std::vector<SymbolicGroup> canonical;
  if (!fg_part.is_trivial())
    canonical.push_back(fg(fg_part));
  canonical.insert(canonical.end(), rest.begin(), rest.end());
  if (canonical.empty())
    return trivial();
  if (canonical.size() == 1)
    return canonical.front();
  SymbolicGroup s;
  s.kind_ = Kind::DirectSum;
  s.parts_ = std::move(canonical);
  return s;
}

bool SymbolicGroup::is_free_fg() const {
  return kind_ == Kind::Trivial || (kind_ == Kind::Fg && fg_.is_free());
}

const FgAbGroup& SymbolicGroup::fg_group() const {
  if (kind_ != Kind::Fg)
    throw InvalidArgument("SymbolicGroup::fg_group: not a finitely generated value");
  return fg_;
}

const PrimeSet& SymbolicGroup::inverted_primes() const {
  if (kind_ != Kind::LocalizedIntegers)
    throw InvalidArgument("SymbolicGroup::inverted_primes: not a localization");
  return *inverted_;
}

namespace {

std::string localization_text(const PrimeSet& p) {
  std::ostringstream out;
  if (p.kind() == PrimeSet::Kind::Finite) {
    out << "Z[";
    for (std::size_t i = 0; i < p.listed().size(); ++i)
      out << (i ? "," : "") << "1/" << p.listed()[i].get_str();
    out << ']';
  } else {
    out << "Z[1/p : p not in {";
    for (std::size_t i = 0; i < p.listed().size(); ++i)
      out << (i ? "," : "") << p.listed()[i].get_str();
    out << "}]";
  }
  return out.str();
}

} // namespace

std::string SymbolicGroup::to_string() const {
  switch (kind_) {
  case Kind::Trivial:
    return "0";
  case Kind::Fg:
    return fg_.to_string();
  case Kind::Rationals:
    return "Q";
  case Kind::LocalizedIntegers:
    return localization_text(*inverted_);
  case Kind::DirectSum: {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i])
        ++j;
      out << (i ? " + " : "") << parts_[i].to_string();
      if (j - i > 1)
        out << '^' << (j - i);
      i = j;
    }
    return out.str();
  }
  case Kind::NonTrivialUnknown:
    return "nontrivial(" + reason_ + ")";
  case Kind::Unknown:
    return reason_.empty() ? "unknown" : "unknown(" + reason_ + ")";
  }
  return {};
}

bool operator==(const SymbolicGroup& a, const SymbolicGroup& b) {
  return a.kind_ == b.kind_ && a.fg_ == b.fg_ && a.inverted_ == b.inverted_ &&
         a.parts_ == b.parts_ && a.reason_ == b.reason_;
}

SymbolicGroup ring_group(const CoefficientRing& ring) {
  switch (ring.kind()) {
  case CoefficientRing::Kind::Integers:
    return SymbolicGroup::fg(FgAbGroup::free(1));
  case CoefficientRing::Kind::Rationals:
    return SymbolicGroup::rationals();
  case CoefficientRing::Kind::Modular:
    return SymbolicGroup::cyclic(ring.modulus());
  }
  return {};
}

} // namespace solcm
