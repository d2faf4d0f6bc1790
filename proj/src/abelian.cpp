#include "solcm/abelian.hpp"

#include "solcm/error.hpp"

#include <sstream>

namespace solcm {

FgAbGroup FgAbGroup::free(std::size_t rank) {
  FgAbGroup g;
  g.free_rank_ = rank;
  return g;
}

FgAbGroup FgAbGroup::cyclic(const Integer& n) {
  if (n < 0)
    throw InvalidArgument("FgAbGroup::cyclic: negative order");
  if (n == 0)
    return free(1);
  FgAbGroup g;
  if (n > 1)
    g.torsion_.push_back(n);
  return g;
}

FgAbGroup FgAbGroup::from_orders(std::size_t free_rank, std::span<const Integer> orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 0)
      throw InvalidArgument("FgAbGroup::from_orders: negative order");
    diag(i, i) = orders[i];
  }
  FgAbGroup g = group_from_relations(diag);
  g.free_rank_ += free_rank;
  return g;
}

Integer FgAbGroup::order() const {
  if (!is_finite())
    throw InvalidArgument("FgAbGroup::order: group is infinite");
  Integer n = 1;
  for (const Integer& d : torsion_)
    n *= d;
  return n;
}

std::size_t FgAbGroup::p_rank(const Integer& p) const {
  std::size_t k = 0;
  for (const Integer& d : torsion_)
    if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
      ++k;
  return k;
}

FgAbGroup FgAbGroup::torsion_subgroup() const {
  FgAbGroup g;
  g.torsion_ = torsion_;
  return g;
}

IntMatrix FgAbGroup::relations() const {
  IntMatrix r(generator_count(), torsion_.size());
  for (std::size_t k = 0; k < torsion_.size(); ++k)
    r(free_rank_ + k, k) = torsion_[k];
  return r;
}

FgAbGroup operator+(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Integer> orders = a.torsion_;
  orders.insert(orders.end(), b.torsion_.begin(), b.torsion_.end());
  return FgAbGroup::from_orders(a.free_rank_ + b.free_rank_, orders);
}

std::string FgAbGroup::to_string() const {
  if (is_trivial())
    return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank_ > 0) {
    out << 'Z';
    if (free_rank_ > 1)
      out << '^' << free_rank_;
    first = false;
  }
  for (const Integer& d : torsion_) {
    out << (first ? "" : " + ") << "Z_" << d.get_str();
    first = false;
  }
  return out.str();
}

FgAbGroup group_from_relations(const IntMatrix& relators) {
  SmithForm s = smith_normal_form(relators);
  FgAbGroup g;
  g.free_rank_ = relators.rows() - s.rank;
  // The Smith diagonal already satisfies the divisibility chain.
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1)
      g.torsion_.push_back(s.D(i, i));
  return g;
}

KernelCokernel kernel_cokernel(const IntMatrix& f) {
  SmithForm s = smith_normal_form(f);
  return {FgAbGroup::free(f.cols() - s.rank), group_from_relations(f)};
}

} // namespace solcm
