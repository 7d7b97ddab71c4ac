#include "etalehom/homogeneous.hpp"

#include <algorithm>

#include "etalehom/errors.hpp"
#include "etalehom/lattice.hpp"

namespace etalehom {
namespace {

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

EmbeddingData EmbeddingData::trivial_subgroup(const GroupModel& g) {
  return {g, GroupModel::trivial(g.characteristic()), IntMatrix(g.sc_rank(), 0),
          IntMatrix(g.sa_rank(), 0)};
}

EmbeddingData EmbeddingData::whole_group(const GroupModel& g) {
  return {g, g, IntMatrix::identity(g.sc_rank()), IntMatrix::identity(g.sa_rank())};
}

void EmbeddingData::validate() const {
  if (!(group.characteristic() == subgroup.characteristic()))
    throw ValidationError("group and subgroup have different characteristics (" +
                          std::to_string(group.characteristic().value()) + " vs " +
                          std::to_string(subgroup.characteristic().value()) + ")");
  if (sc_map.rows() != group.sc_rank() || sc_map.cols() != subgroup.sc_rank())
    throw ValidationError("sc_map is " + shape(sc_map.rows(), sc_map.cols()) + ", expected " +
                          shape(group.sc_rank(), subgroup.sc_rank()));
  if (sa_map.rows() != group.sa_rank() || sa_map.cols() != subgroup.sa_rank())
    throw ValidationError("sa_map is " + shape(sa_map.rows(), sa_map.cols()) + ", expected " +
                          shape(group.sa_rank(), subgroup.sa_rank()));
  // The torus of SA_H must land in the torus of SA_G.
  for (std::size_t i = group.torus_rank(); i < group.sa_rank(); ++i)
    for (std::size_t j = 0; j < subgroup.torus_rank(); ++j)
      if (sgn(sa_map(i, j)) != 0)
        throw ValidationError("sa_map sends torus generator " + std::to_string(j) +
                              " of the subgroup into the abelian block (row " +
                              std::to_string(i) + ")");
}

Complex3 build_complex(const EmbeddingData& e, ComplexOptions opts) {
  e.validate();
  const IntMatrix incl_h = coroot_inclusion(e.subgroup);
  const IntMatrix incl_g = coroot_inclusion(e.group);

  const IntMatrix left = e.sa_map * incl_h;
  const IntMatrix right = incl_g * e.sc_map;
  for (std::size_t i = 0; i < left.rows(); ++i)
    for (std::size_t j = 0; j < left.cols(); ++j)
      if (left(i, j) != right(i, j))
        throw PreconditionError(
            "embedding square does not commute at (" + std::to_string(i) + ", " +
            std::to_string(j) + "): sa_map*iota_H gives " + left(i, j).get_str() +
            " but iota_G*sc_map gives " + right(i, j).get_str());

  IntMatrix d2 = vstack(incl_h, -e.sc_map);
  if (opts.negate_d2) d2 = -d2;
  IntMatrix d1 = hstack(e.sa_map, incl_g);

  const SaTateModel sa_h = build_sa_model(e.subgroup);
  const SaTateModel sa_g = build_sa_model(e.group);
  std::vector<TwistBlock> blocks1 = sa_h.blocks();
  blocks1.push_back({e.group.sc_rank(), Twist::One});
  return Complex3(std::move(d2), std::move(d1), {{e.subgroup.sc_rank(), Twist::One}},
                  std::move(blocks1), sa_g.blocks());
}

FgAbGroup pi2_space_integral(const EmbeddingData& e, ComplexOptions opts) {
  const Twist twist = e.subgroup.abelian_dim() == 0 ? Twist::One : Twist::Mixed;
  return complex_homology(build_complex(e, opts), 1).with_twist(twist);
}

FgAbGroup pi2_space(const EmbeddingData& e, ComplexOptions opts) {
  return strip_p_part(pi2_space_integral(e, opts), e.group.characteristic());
}

FgAbGroup h0_space_integral(const EmbeddingData& e) {
  return complex_homology(build_complex(e), 0).with_twist(pi1_twist(e.group));
}

H0Result h0_space(const EmbeddingData& e) {
  return {strip_p_part(h0_space_integral(e), e.group.characteristic()), e.subgroup.connected()};
}

bool h2_check(const EmbeddingData& e) {
  return complex_homology(build_complex(e), 2).is_trivial();
}

ExactnessReport verify_low_degree_exactness(const EmbeddingData& e) {
  if (!e.subgroup.connected())
    throw PreconditionError(
        "low-degree exact sequence requires a connected stabilizer (component group order " +
        std::to_string(e.subgroup.component_group_order()) + ")");
  const Complex3 c = build_complex(e);
  const Characteristic p = e.group.characteristic();

  ExactnessReport report;
  report.pi2_space = pi2_space(e);
  report.pi1_subgroup = pi1_group(e.subgroup);
  report.pi1_group = pi1_group(e.group);
  report.pi1_space = h0_space(e).group;

  // pi2(X) = ker d1 / im d2, presented on a basis of ker d1.
  const IntMatrix cycles = kernel_basis(c.d1());
  const std::optional<IntMatrix> boundaries = solve_integer(cycles, c.d2());
  if (!boundaries) throw PreconditionError("image of d2 is not inside ker d1");

  const PresentedGroup pi2 = PresentedGroup::from_relations(*boundaries);
  const PresentedGroup pi1_h = PresentedGroup::from_relations(coroot_inclusion(e.subgroup));
  const PresentedGroup pi1_g = PresentedGroup::from_relations(coroot_inclusion(e.group));
  const PresentedGroup pi1_x = PresentedGroup::from_relations(c.d1());
  const std::size_t sa_h = e.subgroup.sa_rank();
  const std::size_t sa_g = e.group.sa_rank();

  report.maps = {
      {PresentedGroup::zero(), pi2, IntMatrix(pi2.generators, 0)},
      {pi2, pi1_h, cycles.row_range(0, sa_h)},  // (u, v) |-> [u]
      {pi1_h, pi1_g, e.sa_map},                 // [u] |-> [sa_map u]
      {pi1_g, pi1_x, IntMatrix::identity(sa_g)},
      {pi1_x, PresentedGroup::zero(), IntMatrix(0, sa_g)},
  };
  for (const FgAbGroup& h : presented_sequence_homology(report.maps))
    report.homology.push_back(strip_p_part(h, p));

  report.exact = std::all_of(report.homology.begin(), report.homology.end(),
                             [](const FgAbGroup& h) { return h.is_trivial(); });
  const long alternating = static_cast<long>(report.pi2_space.free_rank()) -
                           static_cast<long>(report.pi1_subgroup.free_rank()) +
                           static_cast<long>(report.pi1_group.free_rank()) -
                           static_cast<long>(report.pi1_space.free_rank());
  report.rank_identity = alternating == 0;
  return report;
}

}  // namespace etalehom
