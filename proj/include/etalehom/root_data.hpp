#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "etalehom/int_matrix.hpp"

namespace etalehom {

/// One simple factor of a Dynkin diagram, e.g. {'E', 6}.
struct SimpleFactor {
  char letter = 'A';
  unsigned rank = 1;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// Cartan type of a semisimple simply connected group: a product of simple
/// types A_n (n >= 1), B_n, C_n (n >= 2), D_n (n >= 3), E6-8, F4, G2.
class CartanType {
 public:
  CartanType() = default;
  /// Throws ValidationError on an unknown letter or a rank the letter does
  /// not allow.
  explicit CartanType(std::vector<SimpleFactor> factors);

  /// Parses "A2", "A1xB3", "A1 x A1"; "1" or "" is the empty type.
  /// Throws ValidationError.
  static CartanType parse(const std::string& text);

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  unsigned rank() const;
  std::string to_string() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  std::vector<SimpleFactor> factors_;
};

/// Block-diagonal Cartan matrix, Bourbaki numbering, entry (i, j) = <a_i^v, a_j>.
IntMatrix cartan_matrix(const CartanType& t);

/// |Z(G^sc)|: the product over simple factors of |det(Cartan matrix)|.
Integer center_order(const CartanType& t);

/// Lattice-level reductive datum: the coroot lattice of G^sc (rank sc_rank)
/// mapped into the cocharacter lattice of a maximal torus (rank cochar_rank).
class ReductiveDatum {
 public:
  ReductiveDatum() = default;
  /// Throws ValidationError when the embedding is not cochar_rank x sc_rank
  /// or the Cartan type's rank differs from sc_rank.
  ReductiveDatum(std::size_t sc_rank, std::size_t cochar_rank, IntMatrix coroot_embedding,
                 std::optional<CartanType> cartan_type = std::nullopt);

  /// A torus of rank n: no semisimple part.
  static ReductiveDatum torus(std::size_t n);
  /// Simply connected form: coroots span the cocharacter lattice.
  static ReductiveDatum simply_connected(const CartanType& t);
  /// Adjoint form: cocharacters = coweights, coroots mapped by the transposed
  /// Cartan matrix.
  static ReductiveDatum adjoint(const CartanType& t);

  std::size_t sc_rank() const { return sc_rank_; }
  std::size_t cochar_rank() const { return cochar_rank_; }
  const IntMatrix& coroot_embedding() const { return embedding_; }
  const std::optional<CartanType>& cartan_type() const { return cartan_type_; }

  friend bool operator==(const ReductiveDatum&, const ReductiveDatum&) = default;

 private:
  std::size_t sc_rank_ = 0;
  std::size_t cochar_rank_ = 0;
  IntMatrix embedding_;
  std::optional<CartanType> cartan_type_;
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks the coroot embedding is injective and, with a Cartan type, that
/// every invariant factor of its cokernel divides the center order.
ValidationReport validate_root_datum(const ReductiveDatum& d);

}  // namespace etalehom
