#pragma once

#include <cstddef>
#include <vector>

#include "etalehom/abelian_group.hpp"
#include "etalehom/int_matrix.hpp"

namespace etalehom {

/// A direct summand of a lattice term, annotated with its Tate twist.
struct TwistBlock {
  std::size_t rank = 0;
  Twist twist = Twist::Zero;

  friend bool operator==(const TwistBlock&, const TwistBlock&) = default;
};

/// Three-term complex of free lattices  L2 --d2--> L1 --d1--> L0,
/// homological degrees 2, 1, 0.
class Complex3 {
 public:
  /// Blocks partition each term; when a block list is empty the term is a
  /// single twist-0 block. Throws ValidationError on shape mismatch and
  /// PreconditionError when d1 * d2 != 0, naming the first nonzero entry.
  Complex3(IntMatrix d2, IntMatrix d1, std::vector<TwistBlock> blocks2 = {},
           std::vector<TwistBlock> blocks1 = {}, std::vector<TwistBlock> blocks0 = {});

  std::size_t rank2() const { return d2_.cols(); }
  std::size_t rank1() const { return d1_.cols(); }
  std::size_t rank0() const { return d1_.rows(); }
  const IntMatrix& d2() const { return d2_; }
  const IntMatrix& d1() const { return d1_; }
  const std::vector<TwistBlock>& blocks(int degree) const;

  /// Twist of the term in `degree`, combined over blocks of positive rank.
  Twist term_twist(int degree) const;

 private:
  IntMatrix d2_;
  IntMatrix d1_;
  std::vector<TwistBlock> blocks_[3];
};

/// Integral homology in degree 0, 1 or 2:
///   H0 = coker d1,  H1 = ker d1 / im d2,  H2 = ker d2.
/// H1 is obtained by writing d2 in a kernel basis of d1. The result carries
/// the twist of the term in that degree.
FgAbGroup complex_homology(const Complex3& c, int degree);

}  // namespace etalehom
