#include <doctest.h>

#include "etalehom/errors.hpp"
#include "etalehom/lattice.hpp"
#include "etalehom/root_data.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace etalehom;

namespace {

std::vector<CartanType> all_simple_types(unsigned max_rank) {
  std::vector<CartanType> out;
  for (unsigned r = 1; r <= max_rank; ++r) {
    out.push_back(CartanType({{'A', r}}));
    if (r >= 2) out.push_back(CartanType({{'B', r}}));
    if (r >= 3) out.push_back(CartanType({{'C', r}}));
    if (r >= 4) out.push_back(CartanType({{'D', r}}));
  }
  for (const char* t : {"E6", "E7", "E8", "F4", "G2"}) out.push_back(CartanType::parse(t));
  return out;
}

// |Z(G^sc)| from the classification tables.
long expected_center_order(const SimpleFactor& f) {
  switch (f.letter) {
    case 'A': return f.rank + 1;
    case 'B': case 'C': return 2;
    case 'D': return 4;
    case 'E': return f.rank == 6 ? 3 : f.rank == 7 ? 2 : 1;
    default: return 1;
  }
}

}  // namespace

TEST_CASE("Cartan matrix examples") {
  CHECK(cartan_matrix(CartanType::parse("A2")) == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix(CartanType::parse("A1")) == IntMatrix{{2}});
  CHECK(cartan_matrix(CartanType::parse("A1xA1")) == IntMatrix{{2, 0}, {0, 2}});
  CHECK(cartan_matrix(CartanType::parse("G2")) == IntMatrix{{2, -3}, {-1, 2}});
  CHECK(cartan_matrix(CartanType::parse("B2")) == IntMatrix{{2, -1}, {-2, 2}});
}

TEST_CASE("center order examples") {
  // Oracle: cofactor-expansion determinant of the Cartan matrix.
  for (unsigned l = 1; l <= 7; ++l) {
    const CartanType a({{'A', l}});
    CHECK(oracle::laplace_determinant(cartan_matrix(a)) == l + 1);
    CHECK(center_order(a) == l + 1);
  }
  CHECK(oracle::laplace_determinant(cartan_matrix(CartanType::parse("E8"))) == 1);
  CHECK(center_order(CartanType::parse("E8")) == 1);
  CHECK(oracle::laplace_determinant(cartan_matrix(CartanType::parse("D4"))) == 4);
  CHECK(center_order(CartanType::parse("D4")) == 4);
  CHECK(center_order(CartanType::parse("A1xA2")) == 6);
  CHECK(center_order(CartanType()) == 1);
}

TEST_CASE("every simple type: Cartan determinant is the center order") {
  for (const CartanType& t : all_simple_types(8)) {
    CAPTURE(t.to_string());
    const IntMatrix a = cartan_matrix(t);
    CHECK(abs(oracle::laplace_determinant(a)) == expected_center_order(t.factors()[0]));
    CHECK(center_order(t) == expected_center_order(t.factors()[0]));
    // Generalized Cartan matrix axioms and a tree-shaped Dynkin diagram.
    std::size_t edges = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      CHECK(a(i, i) == 2);
      for (std::size_t j = i + 1; j < a.cols(); ++j) {
        CHECK(a(i, j) <= 0);
        CHECK((a(i, j) == 0) == (a(j, i) == 0));
        const Integer bond = a(i, j) * a(j, i);
        CHECK(bond <= 3);
        edges += bond != 0;
      }
    }
    CHECK(edges + 1 == a.rows());
  }
}

TEST_CASE("Cartan type parsing and validation") {
  CHECK(CartanType::parse("A1xB3").to_string() == "A1xB3");
  CHECK(CartanType::parse("A1*A2").rank() == 3);
  CHECK(CartanType::parse("").rank() == 0);
  CHECK(CartanType::parse(CartanType().to_string()) == CartanType());
  CHECK_THROWS_AS(CartanType::parse("B1"), ValidationError);
  CHECK_THROWS_AS(CartanType::parse("E9"), ValidationError);
  CHECK_THROWS_AS(CartanType::parse("D2"), ValidationError);
  CHECK_THROWS_AS(CartanType::parse("Q3"), ValidationError);
  CHECK_THROWS_AS(CartanType::parse("A"), ValidationError);
}

TEST_CASE("validate_root_datum examples") {
  const CartanType a1 = CartanType::parse("A1");
  CHECK(validate_root_datum({1, 1, IntMatrix{{2}}, a1}).ok());
  const ValidationReport bad = validate_root_datum({1, 1, IntMatrix{{3}}, a1});
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].find("does not divide") != std::string::npos);
  CHECK(validate_root_datum(ReductiveDatum::torus(5)).ok());
  const ValidationReport zero = validate_root_datum({1, 1, IntMatrix{{0}}});
  CHECK_FALSE(zero.ok());
  CHECK(zero.failures[0].find("not injective") != std::string::npos);
}

TEST_CASE("reductive datum shape checks") {
  CHECK_THROWS_AS(ReductiveDatum(2, 2, IntMatrix{{1}}), ValidationError);
  CHECK_THROWS_AS(ReductiveDatum(1, 1, IntMatrix{{1}}, CartanType::parse("A2")), ValidationError);
}

TEST_CASE("simply connected and adjoint data validate") {
  for (const CartanType& t : all_simple_types(6)) {
    CAPTURE(t.to_string());
    const ReductiveDatum sc = ReductiveDatum::simply_connected(t);
    const ReductiveDatum ad = ReductiveDatum::adjoint(t);
    CHECK(validate_root_datum(sc).ok());
    CHECK(validate_root_datum(ad).ok());
    CHECK(cokernel_structure(sc.coroot_embedding()).is_trivial());
    CHECK(cokernel_structure(ad.coroot_embedding()).torsion_order() == center_order(t));
  }
}

TEST_CASE("random intermediate lattices validate") {
  gen::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const ReductiveDatum d = gen::random_reductive_datum(rng, 6, 2);
    CHECK(validate_root_datum(d).ok());
  }
}
