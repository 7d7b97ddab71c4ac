#pragma once

#include <cstddef>
#include <optional>

#include "etalehom/abelian_group.hpp"
#include "etalehom/int_matrix.hpp"

namespace etalehom {

/// U * M * V = D with U, V unimodular and D diagonal in Smith form:
/// d_1 | d_2 | ... | d_r nonnegative, followed by zeros.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
  /// The nonzero diagonal, in order.
  std::vector<Integer> diagonal() const;
};

/// Smith normal form with transforms. Pivots on the entry of least absolute
/// value in the active submatrix; divisibility is repaired at the end with
/// 2x2 gcd/lcm transforms.
SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice of `m`, zero rows
/// dropped. Pivots are positive; entries above a pivot lie in [0, pivot).
/// The result is a canonical basis of the lattice spanned by the rows.
IntMatrix hermite_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Exact determinant (fraction-free elimination). Throws ValidationError on
/// a non-square matrix.
Integer determinant(const IntMatrix& m);

/// Z^rows / im(m) in invariant-factor form (integral, twist 0).
FgAbGroup cokernel_structure(const IntMatrix& m);

/// Columns form a basis of ker(m) in Z^cols, given as the transpose of the
/// Hermite normal form of that lattice. A cols x 0 matrix when m is injective.
IntMatrix kernel_basis(const IntMatrix& m);

/// A basis (as columns, Hermite-reduced) of the lattice spanned by the
/// columns of `m`.
IntMatrix image_basis(const IntMatrix& m);

/// Some integer X with a * X = b, or nullopt when none exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

/// True iff every column of `b` lies in the column lattice of `a`.
bool columns_in_lattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace etalehom
