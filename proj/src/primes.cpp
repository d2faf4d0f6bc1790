#include "solcm/primes.hpp"

#include "solcm/error.hpp"
#include "solcm/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace solcm {

namespace {

std::vector<Integer> parse_prime_list(std::string_view text, std::string_view whole) {
  std::vector<Integer> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    if (item.empty() || item.size() > 40 ||
        !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw InvalidArgument("malformed prime list '" + std::string(whole) + "'");
    out.emplace_back(std::string(item));
    pos = comma + 1;
  }
  return out;
}

void normalize(std::vector<Integer>& primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const Integer& p : primes)
    if (!is_prime(p))
      throw InvalidArgument("prime set entry " + p.get_str() + " is not prime");
}

} // namespace

PrimeSet PrimeSet::finite(std::vector<Integer> primes) {
  if (primes.empty())
    throw InvalidArgument("prime set must be nonempty");
  normalize(primes);
  PrimeSet s;
  s.kind_ = Kind::Finite;
  s.listed_ = std::move(primes);
  return s;
}

PrimeSet PrimeSet::all() { return PrimeSet(); }

PrimeSet PrimeSet::all_except(std::vector<Integer> excluded) {
  normalize(excluded);
  PrimeSet s;
  s.kind_ = excluded.empty() ? Kind::All : Kind::AllExcept;
  s.listed_ = std::move(excluded);
  return s;
}

PrimeSet PrimeSet::parse(std::string_view spec) {
  std::string_view trimmed = spec;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed.empty())
    throw InvalidArgument("prime set must be nonempty");
  if (trimmed == "all")
    return all();
  constexpr std::string_view except = "all-except:";
  if (trimmed.starts_with(except))
    return all_except(parse_prime_list(trimmed.substr(except.size()), spec));
  return finite(parse_prime_list(trimmed, spec));
}

bool PrimeSet::contains(const Integer& p) const {
  if (!is_prime(p))
    return false;
  const bool listed = std::binary_search(listed_.begin(), listed_.end(), p);
  return kind_ == Kind::Finite ? listed : !listed;
}

std::optional<std::size_t> PrimeSet::index(const Integer& p) const {
  if (!contains(p))
    return std::nullopt;
  if (kind_ == Kind::Finite)
    return static_cast<std::size_t>(std::lower_bound(listed_.begin(), listed_.end(), p) -
                                    listed_.begin()) + 1;
  std::size_t i = 0;
  Integer q = 2;
  for (;;) {
    if (contains(q))
      ++i;
    if (q == p)
      return i;
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
  }
}

Integer PrimeSet::nth(std::size_t i) const {
  if (i == 0)
    throw InvalidArgument("PrimeSet::nth: index is 1-based");
  if (kind_ == Kind::Finite) {
    if (i > listed_.size())
      throw InvalidArgument("PrimeSet::nth: index beyond finite prime set");
    return listed_[i - 1];
  }
  Integer q = 2;
  std::size_t seen = 0;
  for (;;) {
    if (contains(q) && ++seen == i)
      return q;
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
  }
}

std::string PrimeSet::descriptor() const {
  if (kind_ == Kind::All)
    return "all";
  std::ostringstream out;
  if (kind_ == Kind::AllExcept)
    out << "all-except:";
  for (std::size_t i = 0; i < listed_.size(); ++i)
    out << (i ? "," : "") << listed_[i].get_str();
  return out.str();
}

MultiplierSequence MultiplierSequence::from_primes(const PrimeSet& primes) {
  if (primes.is_finite()) {
    Integer n = 1;
    for (const Integer& p : primes.listed())
      n *= p;
    return constant(n);
  }
  MultiplierSequence s;
  s.mode_ = Mode::PartialProducts;
  s.constant_ = 0;
  s.primes_ = primes;
  return s;
}

MultiplierSequence MultiplierSequence::constant(const Integer& n) {
  if (n < 1)
    throw InvalidArgument("multiplier must be >= 1");
  MultiplierSequence s;
  s.constant_ = n;
  return s;
}

Integer MultiplierSequence::at(std::size_t i) const {
  if (i == 0)
    throw InvalidArgument("MultiplierSequence::at: index is 1-based");
  if (mode_ == Mode::ConstantProduct)
    return constant_;
  Integer n = 1;
  Integer q = 2;
  for (std::size_t seen = 0; seen < i; mpz_nextprime(q.get_mpz_t(), q.get_mpz_t()))
    if (primes_->contains(q)) {
      n *= q;
      ++seen;
    }
  return n;
}

bool MultiplierSequence::divides_eventually(const Integer& r) const {
  if (r < 1)
    throw InvalidArgument("divides_eventually: argument must be positive");
  if (mode_ == Mode::ConstantProduct)
    return mpz_divisible_p(constant_.get_mpz_t(), r.get_mpz_t()) != 0;
  // Partial products are squarefree and eventually contain every member.
  std::vector<Integer> f = factorize(r);
  if (std::adjacent_find(f.begin(), f.end()) != f.end())
    return false;
  return std::all_of(f.begin(), f.end(), [&](const Integer& p) { return primes_->contains(p); });
}

bool MultiplierSequence::never_divides(const Integer& r) const {
  // n(i) is nondecreasing under divisibility, so "divides some n(i)" and
  // "divides all late n(i)" coincide.
  return !divides_eventually(r);
}

bool MultiplierSequence::exceeds_one_infinitely_often() const {
  return mode_ == Mode::PartialProducts || constant_ > 1;
}

std::optional<PrimeSet> MultiplierSequence::support() const {
  if (mode_ == Mode::PartialProducts)
    return primes_;
  if (constant_ == 1)
    return std::nullopt;
  return PrimeSet::finite(prime_divisors(constant_));
}

Integer MultiplierSequence::strip_support(const Integer& m) const {
  if (m < 1)
    throw InvalidArgument("strip_support: argument must be positive");
  Integer rest = m;
  if (mode_ == Mode::ConstantProduct) {
    Integer g;
    for (;;) {
      mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), constant_.get_mpz_t());
      if (g == 1)
        return rest;
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), g.get_mpz_t());
    }
  }
  // Infinite sets: keep exactly the excluded primes' contributions.
  Integer kept = 1;
  for (const Integer& e : primes_->listed())
    while (mpz_divisible_p(rest.get_mpz_t(), e.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), e.get_mpz_t());
      kept *= e;
    }
  return kept;
}

std::string MultiplierSequence::to_string() const {
  if (mode_ == Mode::ConstantProduct)
    return "constant " + constant_.get_str();
  return "partial products over " + primes_->descriptor();
}

} // namespace solcm
