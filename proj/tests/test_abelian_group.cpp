#include <doctest.h>

#include "etalehom/abelian_group.hpp"
#include "etalehom/errors.hpp"

using namespace etalehom;

TEST_CASE("characteristic must be zero or prime") {
  CHECK(Characteristic(0).value() == 0);
  CHECK(Characteristic(7).value() == 7);
  CHECK_THROWS_WITH_AS(Characteristic(4), doctest::Contains("not prime"), ValidationError);
  CHECK_THROWS_AS(Characteristic(1), ValidationError);
}

TEST_CASE("group construction validates the divisibility chain") {
  CHECK_NOTHROW(FgAbGroup(1, {2, 4}, Twist::One, Completion::integral()));
  CHECK_THROWS_AS(FgAbGroup(0, {4, 2}, Twist::One, Completion::integral()), ValidationError);
  CHECK_THROWS_AS(FgAbGroup(0, {1}, Twist::One, Completion::integral()), ValidationError);
  CHECK_THROWS_AS(FgAbGroup(0, {6}, Twist::One, Completion::prime_to(Characteristic(3))),
                  ValidationError);
}

TEST_CASE("cyclic orders are normalized") {
  const FgAbGroup g = FgAbGroup::from_cyclic_orders({2, 3, 0, 1}, Twist::Zero);
  CHECK(g.free_rank() == 1);
  CHECK(g.invariant_factors() == std::vector<Integer>{6});
  CHECK(g.torsion_order() == 6);
}

TEST_CASE("strip_p_part examples") {
  const FgAbGroup z6 = FgAbGroup::from_cyclic_orders({6}, Twist::One);
  const FgAbGroup s = strip_p_part(z6, Characteristic(3));
  CHECK(s.invariant_factors() == std::vector<Integer>{2});
  CHECK(s.completion() == Completion::prime_to(Characteristic(3)));

  const FgAbGroup two = FgAbGroup::from_cyclic_orders({4, 8}, Twist::One);
  CHECK(strip_p_part(two, Characteristic(2)).invariant_factors().empty());

  const FgAbGroup free2 = FgAbGroup::from_cyclic_orders({0, 0}, Twist::One);
  CHECK(strip_p_part(free2, Characteristic(5)).free_rank() == 2);

  // Characteristic 0 keeps everything.
  CHECK(strip_p_part(z6, Characteristic(0)).invariant_factors() == std::vector<Integer>{6});
  CHECK_THROWS_AS(strip_p_part(s, Characteristic(2)), ValidationError);
}

TEST_CASE("stripping re-normalizes the chain") {
  // Z/2 + Z/12 at p = 2 leaves Z/3.
  const FgAbGroup g(0, {2, 12}, Twist::One, Completion::integral());
  CHECK(strip_p_part(g, Characteristic(2)).invariant_factors() == std::vector<Integer>{3});
  // Z/6 + Z/30 at p = 5 leaves Z/6 + Z/6.
  const FgAbGroup h(0, {6, 30}, Twist::One, Completion::integral());
  CHECK(strip_p_part(h, Characteristic(5)).invariant_factors() == std::vector<Integer>{6, 6});
}

TEST_CASE("printing") {
  const FgAbGroup g(2, {6}, Twist::One, Completion::prime_to(Characteristic(5)));
  CHECK(g.to_string() == "Z^2 + Z/6 (twist 1, prime-to-5)");
  CHECK(FgAbGroup::trivial(Twist::Mixed).to_string() ==
        "0 (twist mixed, integral)");
  CHECK(FgAbGroup(1, {}, Twist::One, Completion::prime_to(Characteristic(0))).to_string() ==
        "Z^1 (twist 1, prime-to-0)");
}

TEST_CASE("twist and completion parsing") {
  CHECK(parse_twist("mixed") == Twist::Mixed);
  CHECK_FALSE(parse_twist("2"));
  CHECK(Completion::parse("prime-to-3") == Completion::prime_to(Characteristic(3)));
  CHECK(Completion::parse("integral") == Completion::integral());
  CHECK_FALSE(Completion::parse("prime-to-4"));
  CHECK(combine(Twist::One, Twist::One) == Twist::One);
  CHECK(combine(Twist::One, Twist::Zero) == Twist::Mixed);
}

TEST_CASE("isomorphism ignores annotations") {
  const FgAbGroup a(1, {2}, Twist::One, Completion::integral());
  const FgAbGroup b(1, {2}, Twist::Zero, Completion::integral());
  CHECK(a.isomorphic_to(b));
  CHECK_FALSE(a == b);
}
