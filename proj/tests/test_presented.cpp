#include <doctest.h>

#include "etalehom/errors.hpp"
#include "etalehom/presented.hpp"

using namespace etalehom;

namespace {

const PresentedGroup kZ = PresentedGroup::free(1);
const PresentedGroup kZ2 = PresentedGroup::from_relations(IntMatrix{{2}});

}  // namespace

TEST_CASE("presented group structure") {
  CHECK(kZ.structure().free_rank() == 1);
  CHECK(kZ2.structure().invariant_factors() == std::vector<Integer>{2});
  CHECK(PresentedGroup::zero().structure().is_trivial());
  CHECK(PresentedGroup::from_relations(IntMatrix{{2, 0}, {0, 3}}).structure().invariant_factors() ==
        std::vector<Integer>{6});
}

TEST_CASE("0 -> Z -> Z -> 0 via the identity") {
  const PresentedMap maps[] = {{PresentedGroup::zero(), kZ, IntMatrix(1, 0)},
                               {kZ, kZ, IntMatrix{{1}}},
                               {kZ, PresentedGroup::zero(), IntMatrix(0, 1)}};
  const auto h = presented_sequence_homology(maps);
  REQUIRE(h.size() == 2);
  CHECK(h[0].is_trivial());
  CHECK(h[1].is_trivial());
}

TEST_CASE("Z --2--> Z --> Z/2 --> 0 is exact") {
  const PresentedMap maps[] = {{kZ, kZ, IntMatrix{{2}}},
                               {kZ, kZ2, IntMatrix{{1}}},
                               {kZ2, PresentedGroup::zero(), IntMatrix(0, 1)}};
  const auto h = presented_sequence_homology(maps);
  REQUIRE(h.size() == 2);
  CHECK(h[0].is_trivial());
  CHECK(h[1].is_trivial());
}

TEST_CASE("Z --0--> Z/2 --> 0 has homology Z/2 in the middle") {
  // Oracle: every element of Z/2 maps to 0 and none is hit, so both survive.
  const PresentedMap maps[] = {{kZ, kZ2, IntMatrix{{0}}},
                               {kZ2, PresentedGroup::zero(), IntMatrix(0, 1)}};
  const auto h = presented_sequence_homology(maps);
  REQUIRE(h.size() == 1);
  CHECK(h[0].invariant_factors() == std::vector<Integer>{2});
}

TEST_CASE("sequence errors") {
  SUBCASE("mismatched middle groups") {
    const PresentedMap maps[] = {{kZ, kZ, IntMatrix{{1}}}, {kZ2, kZ2, IntMatrix{{1}}}};
    CHECK_THROWS_AS(presented_sequence_homology(maps), ValidationError);
  }
  SUBCASE("map ignoring relations") {
    // Z/2 -> Z sending the generator to 1 is not a homomorphism.
    const PresentedMap maps[] = {{kZ2, kZ, IntMatrix{{1}}}, {kZ, kZ, IntMatrix{{0}}}};
    CHECK_THROWS_AS(presented_sequence_homology(maps), PreconditionError);
  }
  SUBCASE("non-zero composite") {
    const PresentedMap maps[] = {{kZ, kZ, IntMatrix{{1}}}, {kZ, kZ, IntMatrix{{1}}}};
    CHECK_THROWS_AS(presented_sequence_homology(maps), PreconditionError);
  }
  SUBCASE("shape mismatch") {
    const PresentedMap bad{kZ, kZ, IntMatrix{{1, 1}}};
    CHECK_THROWS_AS(bad.validate(), ValidationError);
  }
}
