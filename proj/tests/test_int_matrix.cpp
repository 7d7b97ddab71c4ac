#include <doctest.h>

#include "etalehom/int_matrix.hpp"

using etalehom::IntMatrix;
using etalehom::Integer;

TEST_CASE("construction and element access") {
  IntMatrix m{{1, 2, 3}, {4, 5, 6}};
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(1, 2) == 6);
  m(0, 0) = Integer("123456789012345678901234567890");
  CHECK(m(0, 0) * 2 == Integer("246913578024691357802469135780"));
  CHECK(IntMatrix(3, 0).rows() == 3);
  CHECK(IntMatrix(3, 0).is_zero());
}

TEST_CASE("products, sums and transposes") {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
  CHECK(a + b == IntMatrix{{1, 3}, {4, 4}});
  CHECK(-a == IntMatrix{{-1, -2}, {-3, -4}});
  CHECK(a.transposed() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(a * IntMatrix::identity(2) == a);
  CHECK((IntMatrix(2, 0) * IntMatrix(0, 3)) == IntMatrix(2, 3));
}

TEST_CASE("stacking") {
  const IntMatrix a{{1, 2}};
  const IntMatrix b{{3}};
  CHECK(etalehom::hstack(a, b) == IntMatrix{{1, 2, 3}});
  CHECK(etalehom::vstack(a, IntMatrix{{5, 6}}) == IntMatrix{{1, 2}, {5, 6}});
  CHECK(etalehom::block_diagonal(a, b) == IntMatrix{{1, 2, 0}, {0, 0, 3}});
  CHECK(etalehom::hstack(IntMatrix(2, 0), IntMatrix(2, 1)).cols() == 1);
}

TEST_CASE("elementary operations") {
  IntMatrix m{{1, 2}, {3, 4}};
  m.submul_row(1, 0, 3);
  CHECK(m == IntMatrix{{1, 2}, {0, -2}});
  m.submul_col(1, 0, 2);
  CHECK(m == IntMatrix{{1, 0}, {0, -2}});
  m.negate_row(1);
  m.swap_cols(0, 1);
  CHECK(m == IntMatrix{{0, 1}, {2, 0}});
}

TEST_CASE("diagonal factory pads with zeros") {
  const IntMatrix d = IntMatrix::diagonal({2, 3}, 3, 2);
  CHECK(d == IntMatrix{{2, 0}, {0, 3}, {0, 0}});
}
