#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "etalehom/abelian_group.hpp"
#include "etalehom/int_matrix.hpp"

namespace etalehom {

/// Z^generators / (column lattice of `relations`).
struct PresentedGroup {
  std::size_t generators = 0;
  IntMatrix relations;

  /// The zero group on no generators.
  static PresentedGroup zero() { return {}; }
  /// Z^n, no relations.
  static PresentedGroup free(std::size_t n) { return {n, IntMatrix(n, 0)}; }
  /// Throws ValidationError if `relations` does not have one row per generator.
  static PresentedGroup from_relations(IntMatrix relations);

  FgAbGroup structure() const;

  friend bool operator==(const PresentedGroup&, const PresentedGroup&) = default;
};

/// Homomorphism given by its action on generators:
/// column j is the image of generator j of `source`.
struct PresentedMap {
  PresentedGroup source;
  PresentedGroup target;
  IntMatrix matrix;

  /// Throws ValidationError on shape mismatch and PreconditionError when the
  /// matrix does not carry source relations into target relations.
  void validate() const;
};

/// Homology at each interior node of  A0 -> A1 -> ... -> Ak  (so k-1 groups,
/// integral). Homology at A_i is computed on free lifts: with
/// K = { x : f_i x in im R_{i+1} }, it is K / (im f_{i-1} + im R_i), read off
/// from a Smith reduction after writing the latter in a basis of K.
///
/// Throws ValidationError when consecutive maps do not share their middle
/// group, and PreconditionError when a map ignores relations or two
/// consecutive maps do not compose to zero.
std::vector<FgAbGroup> presented_sequence_homology(std::span<const PresentedMap> seq);

}  // namespace etalehom
