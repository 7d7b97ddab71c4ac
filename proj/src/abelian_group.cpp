#include "etalehom/abelian_group.hpp"

#include <sstream>

#include "etalehom/errors.hpp"
#include "etalehom/lattice.hpp"

namespace etalehom {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Characteristic::Characteristic(unsigned long p) : p_(p) {
  if (p != 0 && !is_prime(p))
    throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
}

std::string to_string(Twist t) {
  switch (t) {
    case Twist::Zero: return "0";
    case Twist::One: return "1";
    case Twist::Mixed: return "mixed";
  }
  return "?";
}

std::optional<Twist> parse_twist(const std::string& s) {
  if (s == "0") return Twist::Zero;
  if (s == "1") return Twist::One;
  if (s == "mixed") return Twist::Mixed;
  return std::nullopt;
}

Twist combine(Twist a, Twist b) { return a == b ? a : Twist::Mixed; }

std::string Completion::to_string() const {
  if (is_integral()) return "integral";
  return "prime-to-" + std::to_string(prime_->value());
}

std::optional<Completion> Completion::parse(const std::string& s) {
  if (s == "integral") return integral();
  const std::string prefix = "prime-to-";
  if (s.rfind(prefix, 0) != 0 || s.size() == prefix.size()) return std::nullopt;
  const std::string digits = s.substr(prefix.size());
  if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
    return std::nullopt;
  const unsigned long p = std::stoul(digits);
  if (p != 0 && !is_prime(p)) return std::nullopt;
  return prime_to(Characteristic(p));
}

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Integer> invariant_factors, Twist twist,
                     Completion completion)
    : free_rank_(free_rank),
      factors_(std::move(invariant_factors)),
      twist_(twist),
      completion_(completion) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw ValidationError("invariant factor " + factors_[i].get_str() + " is not >= 2");
    if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()))
      throw ValidationError("invariant factors " + factors_[i - 1].get_str() + ", " +
                            factors_[i].get_str() + " break the divisibility chain");
  }
  if (!completion_.is_integral() && !completion_.prime().is_zero()) {
    const unsigned long p = completion_.prime().value();
    for (const Integer& d : factors_)
      if (mpz_divisible_ui_p(d.get_mpz_t(), p))
        throw ValidationError("prime-to-" + std::to_string(p) + " group has invariant factor " +
                              d.get_str());
  }
}

FgAbGroup FgAbGroup::from_cyclic_orders(const std::vector<Integer>& orders, Twist twist) {
  std::vector<Integer> diag;
  for (const Integer& o : orders) diag.push_back(abs(o));
  const std::size_t n = diag.size();
  return cokernel_structure(IntMatrix::diagonal(diag, n, n)).with_twist(twist);
}

Integer FgAbGroup::torsion_order() const {
  Integer n = 1;
  for (const Integer& d : factors_) n *= d;
  return n;
}

FgAbGroup FgAbGroup::with_twist(Twist t) const {
  FgAbGroup g = *this;
  g.twist_ = t;
  return g;
}

std::string FgAbGroup::structure_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank_ > 0) {
    out << "Z^" << free_rank_;
    first = false;
  }
  for (const Integer& d : factors_) {
    out << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return out.str();
}

std::string FgAbGroup::to_string() const {
  return structure_string() + " (twist " + etalehom::to_string(twist_) + ", " +
         completion_.to_string() + ")";
}

FgAbGroup strip_p_part(const FgAbGroup& g, Characteristic p) {
  if (!g.completion().is_integral())
    throw ValidationError("strip_p_part expects an integral group, got " + g.to_string());
  std::vector<Integer> factors;
  for (const Integer& d : g.invariant_factors()) {
    Integer stripped = d;
    if (!p.is_zero()) {
      const Integer prime = p.value();
      mpz_remove(stripped.get_mpz_t(), d.get_mpz_t(), prime.get_mpz_t());
    }
    if (stripped != 1) factors.push_back(std::move(stripped));
  }
  return FgAbGroup(g.free_rank(), std::move(factors), g.twist(), Completion::prime_to(p));
}

}  // namespace etalehom
