#include "solcm/ring.hpp"

#include "solcm/error.hpp"

#include <algorithm>
#include <cctype>

namespace solcm {

namespace {

constexpr unsigned long kTrialBound = 10'000'000;

} // namespace

CoefficientRing CoefficientRing::integers() { return {}; }

CoefficientRing CoefficientRing::rationals() {
  CoefficientRing r;
  r.kind_ = Kind::Rationals;
  return r;
}

CoefficientRing CoefficientRing::modular(const Integer& m) {
  if (m < 2)
    throw InvalidArgument("coefficient ring Z_m requires m >= 2, got " + m.get_str());
  CoefficientRing r;
  r.kind_ = Kind::Modular;
  r.modulus_ = m;
  r.prime_ = is_prime(m);
  return r;
}

CoefficientRing CoefficientRing::parse(std::string_view spec) {
  if (spec == "Z")
    return integers();
  if (spec == "Q")
    return rationals();
  constexpr std::string_view prefix = "mod:";
  if (spec.starts_with(prefix)) {
    std::string digits(spec.substr(prefix.size()));
    if (digits.empty() || digits.size() > 200 ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw InvalidArgument("malformed modulus in ring spec '" + std::string(spec) + "'");
    return modular(Integer(digits));
  }
  throw InvalidArgument("unknown coefficient ring '" + std::string(spec) +
                        "' (expected Z, Q or mod:<m>)");
}

const Integer& CoefficientRing::modulus() const {
  if (kind_ != Kind::Modular)
    throw InvalidArgument("CoefficientRing::modulus: ring is not Z_m");
  return modulus_;
}

std::string CoefficientRing::to_string() const {
  switch (kind_) {
  case Kind::Integers:
    return "Z";
  case Kind::Rationals:
    return "Q";
  case Kind::Modular:
    return "Z_" + modulus_.get_str();
  }
  return {};
}

std::string CoefficientRing::spec() const {
  switch (kind_) {
  case Kind::Integers:
    return "Z";
  case Kind::Rationals:
    return "Q";
  case Kind::Modular:
    return "mod:" + modulus_.get_str();
  }
  return {};
}

bool is_prime(const Integer& n) {
  if (n < 2)
    return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<Integer> factorize(const Integer& n) {
  if (n < 1)
    throw InvalidArgument("factorize: argument must be positive");
  std::vector<Integer> out;
  Integer rest = n;
  for (unsigned long d = 2; rest > 1 && d <= kTrialBound; d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > rest)
      break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      out.emplace_back(d);
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
    }
  }
  if (rest > 1) {
    if (!is_prime(rest))
      throw InvalidArgument("factorize: " + n.get_str() + " has large composite cofactor");
    out.push_back(rest);
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> f = factorize(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

} // namespace solcm
