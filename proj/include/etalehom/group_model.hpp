#pragma once

#include <cstddef>

#include "etalehom/abelian_group.hpp"
#include "etalehom/complex.hpp"
#include "etalehom/int_matrix.hpp"
#include "etalehom/root_data.hpp"

namespace etalehom {

/// A smooth connected algebraic group over an algebraically closed field,
/// reduced to the discrete data its low homotopy depends on.
///
/// `unipotent_dim` is carried for bookkeeping only. `component_group_order`
/// matters only when the model is used as a stabilizer.
class GroupModel {
 public:
  GroupModel() = default;
  /// Throws ValidationError when component_group_order is 0 or divisible by
  /// the characteristic.
  GroupModel(ReductiveDatum reductive, std::size_t abelian_dim, std::size_t unipotent_dim,
             Characteristic characteristic, unsigned long component_group_order = 1);

  static GroupModel trivial(Characteristic p) { return {ReductiveDatum::torus(0), 0, 0, p}; }

  const ReductiveDatum& reductive() const { return reductive_; }
  std::size_t abelian_dim() const { return abelian_dim_; }
  std::size_t unipotent_dim() const { return unipotent_dim_; }
  Characteristic characteristic() const { return characteristic_; }
  unsigned long component_group_order() const { return component_group_order_; }
  bool connected() const { return component_group_order_ == 1; }

  std::size_t sc_rank() const { return reductive_.sc_rank(); }
  std::size_t torus_rank() const { return reductive_.cochar_rank(); }
  /// Rank of the Tate module of the maximal semi-abelian subvariety.
  std::size_t sa_rank() const { return torus_rank() + 2 * abelian_dim_; }

  GroupModel with_unipotent_dim(std::size_t dim) const;
  GroupModel with_component_group_order(unsigned long order) const;

  friend bool operator==(const GroupModel&, const GroupModel&) = default;

 private:
  ReductiveDatum reductive_;
  std::size_t abelian_dim_ = 0;
  std::size_t unipotent_dim_ = 0;
  Characteristic characteristic_;
  unsigned long component_group_order_ = 1;
};

/// Free split model of the prime-to-p Tate module of SA_G:
/// Z^(n + 2g), block order [torus | abelian], twists [1 | 0].
struct SaTateModel {
  std::size_t torus_rank = 0;
  std::size_t abelian_rank = 0;

  std::size_t rank() const { return torus_rank + abelian_rank; }
  std::vector<TwistBlock> blocks() const {
    return {{torus_rank, Twist::One}, {abelian_rank, Twist::Zero}};
  }
};

SaTateModel build_sa_model(const GroupModel& g);

/// The coroot embedding followed by the inclusion of the torus block:
/// [iota ; 0], of shape sa_rank x sc_rank.
IntMatrix coroot_inclusion(const GroupModel& g);

/// Twist of pi_1(G): 1 without abelian part, 0 without torus, else mixed.
Twist pi1_twist(const GroupModel& g);

/// coker(coroot_inclusion), integral.
FgAbGroup pi1_group_integral(const GroupModel& g);

/// pi_1(G)^(p'): the cokernel of T_{G^sc*} -> T_(p')(SA_G), p-stripped.
FgAbGroup pi1_group(const GroupModel& g);

/// pi_2(G)^(p') = 0 at the lattice level: H_1 of [0 -> Z^l -> Z^(n+2g)]
/// vanishes. True for every model whose coroot embedding is injective.
bool pi2_group_check(const GroupModel& g);

}  // namespace etalehom
