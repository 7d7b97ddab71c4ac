#include "etalehom/group_model.hpp"

#include "etalehom/errors.hpp"
#include "etalehom/lattice.hpp"

namespace etalehom {

GroupModel::GroupModel(ReductiveDatum reductive, std::size_t abelian_dim,
                       std::size_t unipotent_dim, Characteristic characteristic,
                       unsigned long component_group_order)
    : reductive_(std::move(reductive)),
      abelian_dim_(abelian_dim),
      unipotent_dim_(unipotent_dim),
      characteristic_(characteristic),
      component_group_order_(component_group_order) {
  if (component_group_order_ == 0) throw ValidationError("component group order must be positive");
  const unsigned long p = characteristic_.value();
  if (p != 0 && component_group_order_ % p == 0)
    throw ValidationError("component group order " + std::to_string(component_group_order_) +
                          " is not prime to the characteristic " + std::to_string(p));
}

GroupModel GroupModel::with_unipotent_dim(std::size_t dim) const {
  GroupModel g = *this;
  g.unipotent_dim_ = dim;
  return g;
}

GroupModel GroupModel::with_component_group_order(unsigned long order) const {
  return {reductive_, abelian_dim_, unipotent_dim_, characteristic_, order};
}

SaTateModel build_sa_model(const GroupModel& g) {
  return {g.torus_rank(), 2 * g.abelian_dim()};
}

IntMatrix coroot_inclusion(const GroupModel& g) {
  return vstack(g.reductive().coroot_embedding(), IntMatrix(2 * g.abelian_dim(), g.sc_rank()));
}

Twist pi1_twist(const GroupModel& g) {
  if (g.abelian_dim() == 0) return Twist::One;
  if (g.torus_rank() == 0) return Twist::Zero;
  return Twist::Mixed;
}

FgAbGroup pi1_group_integral(const GroupModel& g) {
  return cokernel_structure(coroot_inclusion(g)).with_twist(pi1_twist(g));
}

FgAbGroup pi1_group(const GroupModel& g) {
  return strip_p_part(pi1_group_integral(g), g.characteristic());
}

bool pi2_group_check(const GroupModel& g) {
  const SaTateModel sa = build_sa_model(g);
  const Complex3 c(IntMatrix(g.sc_rank(), 0), coroot_inclusion(g), {},
                   {{g.sc_rank(), Twist::One}}, sa.blocks());
  return complex_homology(c, 1).is_trivial();
}

}  // namespace etalehom
