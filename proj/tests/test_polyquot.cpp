#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "smalg/constructors.hpp"
#include "smalg/polyquot.hpp"

using namespace smalg;

TEST_CASE("GF(8) = Z_2[x]/(x^3 + x + 1)") {
  PolyModRing ring(2, {1, 1, 0, 1});
  CHECK(ring.element_count() == 8);
  CHECK(is_irreducible(2, ring.modulus()).first);
  auto [field, zdiv] = quotient_is_field(ring);
  CHECK(field);
  CHECK_FALSE(zdiv.has_value());
  CHECK(check_field(ring.to_table()).ok());

  // {0, 1} reproduces the Z_2 tables entrywise
  FiniteRingTable t = ring.to_table();
  long long i0 = ring.index_of({}), i1 = ring.index_of({1});
  Subset sub = {static_cast<ElementId>(std::min(i0, i1)),
                static_cast<ElementId>(std::max(i0, i1))};
  FiniteRingTable z2 = build_zn(2);
  FiniteRingTable restr = t.restrict_to(sub);
  CHECK(restr.add == z2.add);
  CHECK(restr.mul == z2.mul);

  // every nonzero element is invertible
  for (long long c = 1; c < 8; ++c) {
    auto inv = ring.inverse(ring.element(c));
    REQUIRE(inv.has_value());
    CHECK(ring.mul(ring.element(c), *inv) == PolyZp{1});
  }
}

TEST_CASE("Z_2[x]/(x^2 + 1) has the zero divisor (1 + x)^2") {
  PolyModRing ring(2, {1, 0, 1});
  auto [field, zdiv] = quotient_is_field(ring);
  CHECK_FALSE(field);
  REQUIRE(zdiv.has_value());
  CHECK(ring.mul(zdiv->first, zdiv->second).empty());  // product is 0
  PolyZp one_plus_x = {1, 1};
  CHECK(ring.mul(one_plus_x, one_plus_x).empty());
  CHECK_FALSE(ring.inverse(one_plus_x).has_value());
}

TEST_CASE("Z_3[x]/(x^4 + 1) is an 81-element non-field with units") {
  PolyModRing ring(3, {1, 0, 0, 0, 1});
  CHECK(ring.element_count() == 81);
  auto [irred, factors] = is_irreducible(3, ring.modulus());
  CHECK_FALSE(irred);
  REQUIRE(factors.has_value());
  // the factor pair re-multiplies to the modulus
  CHECK(polydetail::mul(factors->first, factors->second, 3) == ring.modulus());
  CHECK_FALSE(quotient_is_field(ring).first);
  // 2x^2 is a unit with inverse x^2
  PolyZp two_x2 = {0, 0, 2}, x2 = {0, 0, 1};
  auto inv = ring.inverse(two_x2);
  REQUIRE(inv.has_value());
  CHECK(*inv == x2);
  CHECK(ring.mul(two_x2, x2) == PolyZp{1});
}

TEST_CASE("GF(9) arithmetic is a field") {
  PolyModRing ring(3, {1, 0, 1});  // x^2 + 1 is irreducible over Z_3
  CHECK(ring.element_count() == 9);
  CHECK(quotient_is_field(ring).first);
  CHECK(check_field(ring.to_table()).ok());
}

TEST_CASE("encoding round trip and reduction") {
  PolyModRing ring(5, {2, 0, 0, 1});  // x^3 + 2 over Z_5
  for (long long c = 0; c < ring.element_count(); ++c)
    CHECK(ring.index_of(ring.element(c)) == c);
  // x^3 reduces to -2 = 3
  CHECK(ring.reduce({0, 0, 0, 1}) == PolyZp{3});
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    PolyZp a = ring.element(rng() % ring.element_count());
    PolyZp b = ring.element(rng() % ring.element_count());
    // commutativity and distributivity spot checks against raw arithmetic
    CHECK(ring.mul(a, b) == ring.mul(b, a));
    PolyZp c = ring.element(rng() % ring.element_count());
    CHECK(ring.mul(a, ring.add(b, c)) ==
          ring.add(ring.mul(a, b), ring.mul(a, c)));
  }
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(PolyModRing(4, {1, 1, 1}), NonPrimeModulus);
  CHECK_THROWS_AS(PolyModRing(2, {1}), ZeroDegree);
  CHECK_THROWS_AS(PolyModRing(2, {1, 1, 0, 1}).to_table(4), SizeGuard);
}

TEST_CASE("polynomial pretty printing") {
  CHECK(poly_to_string({1, 1, 0, 1}) == "x^3 + x + 1");
  CHECK(poly_to_string({}) == "0");
  CHECK(poly_to_string({0, 0, 2}) == "2x^2");
}
