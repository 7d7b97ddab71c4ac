#include <doctest.h>

#include <numeric>

#include "etalehom/errors.hpp"
#include "etalehom/lattice.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using etalehom::FgAbGroup;
using etalehom::IntMatrix;
using etalehom::Integer;

namespace {

bool unimodular(const IntMatrix& m) { return abs(oracle::laplace_determinant(m)) == 1; }

void check_snf(const IntMatrix& m) {
  const auto snf = etalehom::smith_normal_form(m);
  REQUIRE(snf.U * m * snf.V == snf.D);
  const std::vector<Integer> diag = snf.diagonal();
  for (std::size_t i = 0; i < snf.D.rows(); ++i)
    for (std::size_t j = 0; j < snf.D.cols(); ++j)
      if (i != j) REQUIRE(snf.D(i, j) == 0);
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    REQUIRE(diag[i] > 0);
    REQUIRE(diag[i + 1] % diag[i] == 0);
  }
  CHECK(diag == oracle::determinantal_divisor_diagonal(m));
  CHECK(snf.rank() == oracle::bareiss_rank(m));
}

}  // namespace

TEST_CASE("smith normal form of [[2,4],[6,8]] is diag(2,4)") {
  // Oracle: d1 is the gcd of the entries and d1*d2 = |det| = 8.
  const IntMatrix m{{2, 4}, {6, 8}};
  CHECK(oracle::determinantal_divisor_diagonal(m) == std::vector<Integer>{2, 4});
  const auto snf = etalehom::smith_normal_form(m);
  CHECK(snf.D == IntMatrix{{2, 0}, {0, 4}});
  CHECK(snf.U * m * snf.V == snf.D);
  CHECK(unimodular(snf.U));
  CHECK(unimodular(snf.V));
}

TEST_CASE("smith normal form of identity and zero") {
  const auto id = etalehom::smith_normal_form(IntMatrix::identity(4));
  CHECK(id.D == IntMatrix::identity(4));
  const auto zero = etalehom::smith_normal_form(IntMatrix(3, 2));
  CHECK(zero.D == IntMatrix(3, 2));
  CHECK(zero.rank() == 0);
  const auto empty = etalehom::smith_normal_form(IntMatrix(0, 3));
  CHECK(empty.D.rows() == 0);
  CHECK(empty.V.rows() == 3);
}

TEST_CASE("smith normal form with large entries") {
  IntMatrix m{{1, 0}, {0, 1}};
  m(0, 0) = Integer("340282366920938463463374607431768211456");  // 2^128
  m(1, 1) = Integer("6");
  const auto snf = etalehom::smith_normal_form(m);
  CHECK(snf.diagonal() == std::vector<Integer>{2, Integer("1020847100762815390390123822295304634368")});
}

TEST_CASE("smith normal form matches determinantal divisors on random matrices") {
  gen::Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(gen::uniform(rng, 0, 4));
    const auto c = static_cast<std::size_t>(gen::uniform(rng, 0, 4));
    const IntMatrix m = gen::random_matrix(rng, r, c, -6, 6);
    check_snf(m);
    const auto snf = etalehom::smith_normal_form(m);
    CHECK(unimodular(snf.U));
    CHECK(unimodular(snf.V));
  }
}

TEST_CASE("smith normal form of a rank-deficient matrix") {
  check_snf(IntMatrix{{1, 2, 3}, {2, 4, 6}, {3, 6, 9}});
  check_snf(IntMatrix{{0, 0, 4}, {0, 6, 0}, {10, 0, 0}});
}

TEST_CASE("cokernel structure examples") {
  // Oracle: SNF of diag(2,3) is diag(1,6) by determinantal divisors.
  CHECK(oracle::determinantal_divisor_diagonal(IntMatrix{{2, 0}, {0, 3}}) ==
        std::vector<Integer>{1, 6});
  const FgAbGroup c = etalehom::cokernel_structure(IntMatrix{{2, 0}, {0, 3}});
  CHECK(c.free_rank() == 0);
  CHECK(c.invariant_factors() == std::vector<Integer>{6});
  CHECK(etalehom::cokernel_structure(IntMatrix{{1}}).is_trivial());
  // Oracle: Z^2 / <(2,0)> enumerated mod 4 has 4 * 2 elements.
  CHECK(oracle::cokernel_order_mod(IntMatrix{{2}, {0}}, 4) == 8);
  const FgAbGroup z2 = etalehom::cokernel_structure(IntMatrix{{2}, {0}});
  CHECK(z2.free_rank() == 1);
  CHECK(z2.invariant_factors() == std::vector<Integer>{2});
}

TEST_CASE("cokernel order agrees with enumeration") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = static_cast<std::size_t>(gen::uniform(rng, 0, 3));
    const auto c = static_cast<std::size_t>(gen::uniform(rng, 0, 3));
    const IntMatrix m = gen::random_matrix(rng, r, c, -4, 4);
    const FgAbGroup g = etalehom::cokernel_structure(m);
    for (unsigned long k : {2ul, 3ul, 4ul, 6ul}) {
      Integer expected = 1;
      for (std::size_t i = 0; i < g.free_rank(); ++i) expected *= k;
      for (const Integer& t : g.invariant_factors()) expected *= std::gcd(t.get_ui(), k);
      CHECK(oracle::cokernel_order_mod(m, k) == expected);
    }
  }
}

TEST_CASE("kernel basis examples") {
  // Oracle: the integer solutions of x + 2y = 0 with |x|,|y| <= 6 are the
  // multiples of (2, -1).
  const IntMatrix k = etalehom::kernel_basis(IntMatrix{{1, 2}});
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 1);
  for (long x = -6; x <= 6; ++x)
    for (long y = -6; y <= 6; ++y)
      if (x + 2 * y == 0) {
        const Integer t = x / k(0, 0);
        CHECK(t * k(0, 0) == x);
        CHECK(t * k(1, 0) == y);
      }
  CHECK(etalehom::kernel_basis(IntMatrix::identity(3)).cols() == 0);
  CHECK(etalehom::kernel_basis(IntMatrix(1, 2)).cols() == 2);
}

TEST_CASE("kernel basis is saturated and annihilated") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = static_cast<std::size_t>(gen::uniform(rng, 0, 4));
    const auto c = static_cast<std::size_t>(gen::uniform(rng, 0, 5));
    const IntMatrix m = gen::random_matrix(rng, r, c, -5, 5);
    const IntMatrix k = etalehom::kernel_basis(m);
    CHECK((m * k).is_zero());
    CHECK(k.cols() == c - oracle::bareiss_rank(m));
    // A saturated sublattice has a torsion-free cokernel.
    CHECK(etalehom::cokernel_structure(k).invariant_factors().empty());
  }
}

TEST_CASE("hermite normal form is canonical") {
  const IntMatrix h = etalehom::hermite_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(h == IntMatrix{{2, 0}, {0, 4}});
  gen::Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = gen::random_matrix(rng, 3, 4, -5, 5);
    const IntMatrix u = gen::random_unimodular(rng, 3).matrix;
    CHECK(etalehom::hermite_normal_form(u * m) == etalehom::hermite_normal_form(m));
  }
}

TEST_CASE("integer solving") {
  const IntMatrix a{{2, 0}, {0, 3}};
  const auto x = etalehom::solve_integer(a, IntMatrix{{4}, {9}});
  REQUIRE(x);
  CHECK(a * *x == IntMatrix{{4}, {9}});
  CHECK_FALSE(etalehom::solve_integer(a, IntMatrix{{1}, {0}}));
  CHECK_FALSE(etalehom::solve_integer(IntMatrix{{1}, {1}}, IntMatrix{{1}, {2}}));
  CHECK(etalehom::columns_in_lattice(IntMatrix{{1}, {1}}, IntMatrix{{3}, {3}}));
}

TEST_CASE("determinant and rank") {
  CHECK(etalehom::determinant(IntMatrix{{2, -1}, {-1, 2}}) == 3);
  CHECK(etalehom::determinant(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(etalehom::determinant(IntMatrix(2, 3)), etalehom::ValidationError);
  gen::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 0, 5));
    const IntMatrix m = gen::random_matrix(rng, n, n, -4, 4);
    CHECK(etalehom::determinant(m) == oracle::laplace_determinant(m));
    CHECK(etalehom::rank(m) == oracle::bareiss_rank(m));
  }
}

TEST_CASE("cokernel structure is invariant under unimodular changes") {
  gen::Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const auto c = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const IntMatrix m = gen::random_matrix(rng, r, c, -6, 6);
    const IntMatrix moved =
        gen::random_unimodular(rng, r).matrix * m * gen::random_unimodular(rng, c).matrix;
    CHECK(etalehom::cokernel_structure(moved) == etalehom::cokernel_structure(m));
  }
}
