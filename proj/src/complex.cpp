#include "solcm/complex.hpp"

#include "solcm/error.hpp"

#include <algorithm>
#include <sstream>

namespace solcm {

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials)
    : ranks_(std::move(ranks)), differentials_(std::move(differentials)) {
  if (ranks_.empty() && differentials_.empty())
    return;
  if (differentials_.size() + 1 != ranks_.size())
    throw InvalidArgument("ChainComplex: need exactly one differential per positive degree");
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    const IntMatrix& d = differentials_[k];
    if (d.rows() != ranks_[k] || d.cols() != ranks_[k + 1])
      throw InvalidArgument("ChainComplex: differential d_" + std::to_string(k + 1) +
                            " has the wrong shape");
  }
  for (std::size_t k = 1; k < differentials_.size(); ++k)
    if (!(differentials_[k - 1] * differentials_[k]).is_zero())
      throw InvalidArgument("ChainComplex: d_" + std::to_string(k) + " * d_" +
                            std::to_string(k + 1) + " is not zero");
}

std::size_t ChainComplex::rank(int n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= ranks_.size())
    return 0;
  return ranks_[static_cast<std::size_t>(n)];
}

IntMatrix ChainComplex::differential(int n) const {
  if (n >= 1 && static_cast<std::size_t>(n) <= differentials_.size())
    return differentials_[static_cast<std::size_t>(n) - 1];
  return IntMatrix(rank(n - 1), rank(n));
}

void GradedGroupTable::set(int degree, const SymbolicGroup& g) {
  if (g.is_trivial())
    cells_.erase(degree);
  else
    cells_[degree] = g;
}

SymbolicGroup GradedGroupTable::at(int degree) const {
  auto it = cells_.find(degree);
  return it == cells_.end() ? SymbolicGroup::trivial() : it->second;
}

std::vector<int> GradedGroupTable::support() const {
  std::vector<int> out;
  for (const auto& [n, g] : cells_)
    out.push_back(n);
  return out;
}

std::string GradedGroupTable::to_string(int top) const {
  int last = top;
  if (!cells_.empty())
    last = std::max(last, cells_.rbegin()->first);
  std::ostringstream out;
  for (int n = 0; n <= last; ++n)
    out << n << ": " << at(n).to_string() << '\n';
  return out.str();
}

namespace {

int top_degree(const ChainComplex& c) { return static_cast<int>(c.size()) - 1; }

std::size_t field_rank(const IntMatrix& m, const CoefficientRing& field) {
  if (m.empty())
    return 0;
  return field.is_rationals() ? rank_over_rationals(m) : rank_mod_p(m, field.modulus());
}

void require_field(const CoefficientRing& ring) {
  if (!ring.is_field())
    throw InvalidArgument("field-rank route needs a prime field or Q, got " + ring.to_string());
}

SymbolicGroup power(const CoefficientRing& ring, std::size_t dim) {
  return SymbolicGroup::direct_sum(std::vector<SymbolicGroup>(dim, ring_group(ring)));
}

std::vector<FgAbGroup> integral_groups(const ChainComplex& c) {
  const int top = top_degree(c);
  std::vector<FgAbGroup> h;
  std::vector<SmithForm> snf;
  for (int n = 0; n <= top + 1; ++n)
    snf.push_back(smith_normal_form(c.differential(n)));
  for (int n = 0; n <= top; ++n) {
    const SmithForm& incoming = snf[static_cast<std::size_t>(n) + 1];
    const std::size_t free = c.rank(n) - snf[static_cast<std::size_t>(n)].rank - incoming.rank;
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < incoming.rank; ++i)
      orders.push_back(incoming.D(i, i));
    h.push_back(FgAbGroup::from_orders(free, orders));
  }
  return h;
}

} // namespace

GradedGroupTable integral_homology(const ChainComplex& c) {
  GradedGroupTable t;
  std::vector<FgAbGroup> h = integral_groups(c);
  for (std::size_t n = 0; n < h.size(); ++n)
    t.set(static_cast<int>(n), SymbolicGroup::fg(h[n]));
  return t;
}

GradedGroupTable homology_uct(const ChainComplex& c, const CoefficientRing& ring) {
  std::vector<FgAbGroup> h = integral_groups(c);
  GradedGroupTable t;
  for (std::size_t n = 0; n < h.size(); ++n) {
    SymbolicGroup tor = n == 0 ? SymbolicGroup::trivial() : tor_with(h[n - 1], ring);
    t.set(static_cast<int>(n), SymbolicGroup::direct_sum({tensor_with(h[n], ring), tor}));
  }
  // Tor(H_top, R) lands one degree above the complex.
  if (!h.empty())
    t.set(static_cast<int>(h.size()), tor_with(h.back(), ring));
  return t;
}

GradedGroupTable homology_field_rank(const ChainComplex& c, const CoefficientRing& field) {
  require_field(field);
  GradedGroupTable t;
  const int top = top_degree(c);
  for (int n = 0; n <= top; ++n) {
    const std::size_t dim =
        c.rank(n) - field_rank(c.differential(n), field) - field_rank(c.differential(n + 1), field);
    t.set(n, power(field, dim));
  }
  return t;
}

GradedGroupTable homology_with_coefficients(const ChainComplex& c, const CoefficientRing& ring) {
  GradedGroupTable uct = homology_uct(c, ring);
  if (ring.is_field() && homology_field_rank(c, ring) != uct)
    throw InconsistencyError("homology over " + ring.to_string() +
                             ": universal-coefficient and field-rank routes disagree");
  return uct;
}

GradedGroupTable cohomology_uct(const ChainComplex& c, const CoefficientRing& ring) {
  std::vector<FgAbGroup> h = integral_groups(c);
  GradedGroupTable t;
  for (std::size_t n = 0; n < h.size(); ++n) {
    SymbolicGroup ext = n == 0 ? SymbolicGroup::trivial() : ext_into(h[n - 1], ring);
    t.set(static_cast<int>(n), SymbolicGroup::direct_sum({hom_into(h[n], ring), ext}));
  }
  if (!h.empty())
    t.set(static_cast<int>(h.size()), ext_into(h.back(), ring));
  return t;
}

GradedGroupTable cohomology_field_rank(const ChainComplex& c, const CoefficientRing& field) {
  require_field(field);
  GradedGroupTable t;
  const int top = top_degree(c);
  for (int n = 0; n <= top; ++n) {
    // delta^n = d_{n+1}^T : C^n -> C^{n+1}, delta^{n-1} = d_n^T.
    const std::size_t outgoing = field_rank(c.differential(n + 1).transpose(), field);
    const std::size_t incoming = field_rank(c.differential(n).transpose(), field);
    t.set(n, power(field, c.rank(n) - outgoing - incoming));
  }
  return t;
}

GradedGroupTable cohomology_with_coefficients(const ChainComplex& c, const CoefficientRing& ring) {
  GradedGroupTable uct = cohomology_uct(c, ring);
  if (ring.is_field() && cohomology_field_rank(c, ring) != uct)
    throw InconsistencyError("cohomology over " + ring.to_string() +
                             ": universal-coefficient and field-rank routes disagree");
  return uct;
}

ChainComplex lens_complex(const Integer& q) {
  if (q < 1)
    throw InvalidArgument("lens space L(q,1) needs q >= 1, got " + q.get_str());
  return ChainComplex({1, 1, 1, 1}, {IntMatrix(1, 1), IntMatrix::scalar(1, q), IntMatrix(1, 1)});
}

ChainComplex sphere_complex(std::size_t n) {
  std::vector<std::size_t> ranks(n + 1, 0);
  ranks.front() = 1;
  ranks.back() += 1;
  std::vector<IntMatrix> d;
  for (std::size_t k = 1; k <= n; ++k)
    d.emplace_back(ranks[k - 1], ranks[k]);
  return ChainComplex(std::move(ranks), std::move(d));
}

namespace {

// Prime-power decomposition of the torsion of a finite group.
std::vector<Integer> elementary_divisors(const FgAbGroup& g) {
  std::vector<Integer> out;
  for (const Integer& d : g.torsion()) {
    std::vector<Integer> f = factorize(d);
    for (std::size_t i = 0; i < f.size();) {
      std::size_t j = i;
      Integer q = 1;
      while (j < f.size() && f[j] == f[i])
        q *= f[j++];
      out.push_back(q);
      i = j;
    }
  }
  return out;
}

SymbolicGroup remove_ring_summand(const SymbolicGroup& g, const CoefficientRing& ring) {
  const auto fail = [&] {
    return InvalidArgument("degree-0 group " + g.to_string() + " has no " + ring.to_string() +
                           " summand to reduce");
  };
  std::vector<SymbolicGroup> parts =
      g.kind() == SymbolicGroup::Kind::DirectSum ? g.summands() : std::vector<SymbolicGroup>{g};

  if (ring.is_rationals()) {
    auto it = std::find(parts.begin(), parts.end(), SymbolicGroup::rationals());
    if (it == parts.end())
      throw fail();
    parts.erase(it);
    return SymbolicGroup::direct_sum(parts);
  }

  auto it = std::find_if(parts.begin(), parts.end(), [](const SymbolicGroup& s) {
    return s.kind() == SymbolicGroup::Kind::Fg;
  });
  if (it == parts.end())
    throw fail();
  const FgAbGroup a = it->fg_group();
  FgAbGroup reduced;
  if (ring.is_integers()) {
    if (a.free_rank() == 0)
      throw fail();
    reduced = FgAbGroup::from_orders(a.free_rank() - 1, a.torsion());
  } else {
    std::vector<Integer> divisors = elementary_divisors(a);
    for (const Integer& q : elementary_divisors(FgAbGroup::cyclic(ring.modulus()))) {
      auto hit = std::find(divisors.begin(), divisors.end(), q);
      if (hit == divisors.end())
        throw fail();
      divisors.erase(hit);
    }
    reduced = FgAbGroup::from_orders(a.free_rank(), divisors);
  }
  *it = SymbolicGroup::fg(reduced);
  return SymbolicGroup::direct_sum(parts);
}

} // namespace

GradedGroupTable suspension_homology(const GradedGroupTable& t, const CoefficientRing& ring) {
  if (t.at(0).is_trivial())
    throw InvalidArgument("suspension needs a nonempty space: degree-0 homology is trivial");
  if (!t.at(0).is_identified())
    throw InvalidArgument("suspension needs an identified degree-0 group");
  GradedGroupTable out;
  out.set(0, ring_group(ring));
  for (const auto& [n, g] : t.cells()) {
    if (n < 0)
      throw InvalidArgument("suspension: negative degree in table");
    out.set(n + 1, n == 0 ? remove_ring_summand(g, ring) : g);
  }
  return out;
}

} // namespace solcm
