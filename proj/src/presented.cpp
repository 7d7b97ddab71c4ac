#include "etalehom/presented.hpp"

#include <string>

#include "etalehom/errors.hpp"
#include "etalehom/lattice.hpp"

namespace etalehom {
namespace {

std::string shape(const IntMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

PresentedGroup PresentedGroup::from_relations(IntMatrix relations) {
  const std::size_t n = relations.rows();
  return {n, std::move(relations)};
}

FgAbGroup PresentedGroup::structure() const { return cokernel_structure(relations); }

void PresentedMap::validate() const {
  if (source.relations.rows() != source.generators || target.relations.rows() != target.generators)
    throw ValidationError("presented group: relation matrix rows must match generator count");
  if (matrix.rows() != target.generators || matrix.cols() != source.generators)
    throw ValidationError("presented map: matrix is " + shape(matrix) + ", expected " +
                          std::to_string(target.generators) + "x" +
                          std::to_string(source.generators));
  if (!columns_in_lattice(target.relations, matrix * source.relations))
    throw PreconditionError("presented map does not carry source relations into target relations");
}

std::vector<FgAbGroup> presented_sequence_homology(std::span<const PresentedMap> seq) {
  for (const PresentedMap& f : seq) f.validate();
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (!(seq[i - 1].target == seq[i].source))
      throw ValidationError("presented sequence: map " + std::to_string(i - 1) +
                            " does not land in the source of map " + std::to_string(i));
    if (!columns_in_lattice(seq[i].target.relations, seq[i].matrix * seq[i - 1].matrix))
      throw PreconditionError("presented sequence: maps " + std::to_string(i - 1) + " and " +
                              std::to_string(i) + " do not compose to zero");
  }

  std::vector<FgAbGroup> out;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const PresentedMap& in = seq[i - 1];
    const PresentedMap& next = seq[i];
    const std::size_t n = in.target.generators;

    // Preimage of the relation lattice of the next group.
    const IntMatrix lifted = kernel_basis(hstack(next.matrix, next.target.relations));
    const IntMatrix cycles = image_basis(lifted.row_range(0, n));
    const IntMatrix boundaries = hstack(in.matrix, in.target.relations);
    const std::optional<IntMatrix> coords = solve_integer(cycles, boundaries);
    if (!coords)
      throw PreconditionError("presented sequence: image at node " + std::to_string(i) +
                              " escapes the kernel");
    out.push_back(cokernel_structure(*coords));
  }
  return out;
}

}  // namespace etalehom
