#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "etalehom/int_matrix.hpp"

namespace etalehom {

/// Characteristic of the base field: 0 or a prime.
class Characteristic {
 public:
  constexpr Characteristic() = default;
  /// Throws ValidationError unless `p` is 0 or prime.
  explicit Characteristic(unsigned long p);

  unsigned long value() const { return p_; }
  bool is_zero() const { return p_ == 0; }

  friend bool operator==(Characteristic, Characteristic) = default;

 private:
  unsigned long p_ = 0;
};

bool is_prime(unsigned long n);

/// Tate twist annotation. Never used in arithmetic.
enum class Twist { Zero, One, Mixed };

std::string to_string(Twist t);
/// Inverse of to_string; nullopt on an unknown spelling.
std::optional<Twist> parse_twist(const std::string& s);
/// Twist of a sum of pieces with twists `a` and `b`.
Twist combine(Twist a, Twist b);

/// Either an integral model, or the prime-to-p completion of one
/// (p = 0 meaning the full profinite completion).
class Completion {
 public:
  static Completion integral() { return Completion(); }
  static Completion prime_to(Characteristic p) { return Completion(p); }

  bool is_integral() const { return !prime_.has_value(); }
  /// Only meaningful when !is_integral().
  Characteristic prime() const { return prime_.value_or(Characteristic()); }

  std::string to_string() const;
  static std::optional<Completion> parse(const std::string& s);

  friend bool operator==(const Completion&, const Completion&) = default;

 private:
  Completion() = default;
  explicit Completion(Characteristic p) : prime_(p) {}
  std::optional<Characteristic> prime_;
};

/// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk with
/// 2 <= d1 | d2 | ... | dk.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  /// Throws ValidationError when `invariant_factors` is not a divisibility
  /// chain of integers >= 2, or when a prime-to-p group has p-torsion.
  FgAbGroup(std::size_t free_rank, std::vector<Integer> invariant_factors,
            Twist twist = Twist::Zero, Completion completion = Completion::integral());

  /// Normalizes an arbitrary list of cyclic orders (0 meaning Z, 1 ignored)
  /// into invariant-factor form.
  static FgAbGroup from_cyclic_orders(const std::vector<Integer>& orders,
                                      Twist twist = Twist::Zero);
  static FgAbGroup trivial(Twist twist = Twist::Zero) { return FgAbGroup(0, {}, twist); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Twist twist() const { return twist_; }
  const Completion& completion() const { return completion_; }

  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// Order of the torsion subgroup.
  Integer torsion_order() const;

  FgAbGroup with_twist(Twist t) const;

  /// Same abstract group, ignoring annotations.
  bool isomorphic_to(const FgAbGroup& other) const {
    return free_rank_ == other.free_rank_ && factors_ == other.factors_;
  }

  /// e.g. "Z^2 + Z/6 (twist 1, prime-to-3)"; "0 (...)" when trivial.
  std::string to_string() const;
  /// The group part alone, without annotations.
  std::string structure_string() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
  Twist twist_ = Twist::Zero;
  Completion completion_ = Completion::integral();
};

/// Replaces every invariant factor by its largest divisor prime to p and
/// marks the result as prime-to-p completed. p = 0 only changes the marker.
/// Throws ValidationError if `g` is already completed.
FgAbGroup strip_p_part(const FgAbGroup& g, Characteristic p);

}  // namespace etalehom
