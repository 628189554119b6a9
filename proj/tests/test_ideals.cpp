#include <catch2/catch_amalgamated.hpp>

#include "smalg/constructors.hpp"
#include "smalg/ideals.hpp"

using namespace smalg;

TEST_CASE("Z_12 has exactly six ideals with the known flags") {
  FiniteRingTable z12 = build_zn(12);
  auto ideals = enumerate_ideals(z12);
  std::vector<Subset> expect = {{0},
                                {0, 6},
                                {0, 4, 8},
                                {0, 3, 6, 9},
                                {0, 2, 4, 6, 8, 10},
                                {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
  CHECK(ideals == expect);

  auto c06 = classify_ideal(z12, {0, 6});
  CHECK((c06.minimal && c06.principal && !c06.prime && !c06.maximal));
  auto c048 = classify_ideal(z12, {0, 4, 8});
  CHECK((c048.minimal && c048.principal && !c048.prime && !c048.maximal));
  auto c0369 = classify_ideal(z12, {0, 3, 6, 9});
  CHECK((c0369.maximal && c0369.principal && c0369.prime && !c0369.minimal));
  auto ceven = classify_ideal(z12, {0, 2, 4, 6, 8, 10});
  CHECK((ceven.maximal && ceven.principal && ceven.prime && !ceven.minimal));
}

TEST_CASE("both proper nonzero ideals of Z_6 carry all four flags") {
  FiniteRingTable z6 = build_zn(6);
  auto ideals = enumerate_ideals(z6);
  REQUIRE(ideals.size() == 4);
  for (const Subset& i : {Subset{0, 3}, Subset{0, 2, 4}}) {
    auto c = classify_ideal(z6, i);
    CHECK(c.prime);
    CHECK(c.maximal);
    CHECK(c.minimal);
    CHECK(c.principal);
  }
}

TEST_CASE("ideal count of Z_n equals the divisor count") {
  for (int n = 2; n <= 60; ++n) {
    int divisors = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) ++divisors;
    CHECK(static_cast<int>(enumerate_ideals(build_zn(n)).size()) == divisors);
  }
}

TEST_CASE("classify_ideal rejects non-ideals") {
  CHECK_THROWS_AS(classify_ideal(build_zn(4), Subset{0, 1}), NotAnIdeal);
  CHECK_THROWS_AS(enumerate_ideals(trivial_mul_near_ring(4)), AxiomFailure);
}

TEST_CASE("symbolic nZ classification") {
  auto c7 = classify_nZ(7);
  CHECK((c7.prime && c7.maximal && c7.principal && !c7.minimal));
  CHECK(c7.generator == "7");
  auto c6 = classify_nZ(6);
  CHECK((!c6.prime && !c6.maximal && c6.principal && !c6.minimal));
  CHECK_THROWS_AS(classify_nZ(1), Unsupported);
  CHECK_THROWS_AS(classify_nZ(0), Unsupported);
}

TEST_CASE("s-ideal search needs a strictly proper field subset") {
  CHECK_FALSE(find_s_ideal(build_zn(6)).has_value());
  auto w = find_s_ideal(build_zn(12));
  REQUIRE(w.has_value());
  CHECK(w->ideal == Subset{0, 2, 4, 6, 8, 10});
  CHECK(w->field_subset == Subset{0, 4, 8});
  // the subset really is a field inside the ideal
  FiniteRingTable z12 = build_zn(12);
  CHECK(check_field(z12.restrict_to(w->field_subset)).ok());
}

TEST_CASE("relative ideals over a field subset of Z_12") {
  FiniteRingTable z12 = build_zn(12);
  Subset field = {0, 4, 8};
  auto witnesses = find_s_definite_ideals(z12, field);
  CHECK_FALSE(witnesses.empty());
  for (const auto& w : witnesses) {
    // re-check absorption independently
    for (ElementId a : w.ideal)
      for (ElementId b : field)
        CHECK(std::binary_search(w.ideal.begin(), w.ideal.end(),
                                 z12.mul[a][b]));
  }
  CHECK_THROWS_AS(find_s_definite_ideals(z12, Subset{0, 6}), NotAField);
}

TEST_CASE("semigroup ideals in the lattice algebra") {
  CHECK(verify_semigroup_ideal(LatticeSet::z_pos(), LatticeSet::nz_pos(2)));
  CHECK(verify_semigroup_ideal(LatticeSet::z_pos(), LatticeSet::nz_pos(6)));
  CHECK_THROWS_AS(
      verify_semigroup_ideal(LatticeSet::parse("1/2*Z+"), LatticeSet::z_pos()),
      AxiomFailure);
  CHECK_THROWS_AS(
      verify_semigroup_ideal(LatticeSet::z_pos(), LatticeSet::parse("1/2*Z+")),
      NotSubset);
}

TEST_CASE("group-side classification of mZ+ inside Z+") {
  auto c2 = classify_group_side(LatticeSet::nz_pos(2), LatticeSet::z_pos());
  CHECK((c2.prime && c2.maximal && c2.principal && !c2.minimal));
  auto c6 = classify_group_side(LatticeSet::nz_pos(6), LatticeSet::z_pos());
  CHECK((!c6.prime && !c6.maximal && c6.principal));
  // relative scale inside a scaled parent
  auto rel = classify_group_side(LatticeSet::nz_pos(6), LatticeSet::nz_pos(2));
  CHECK(rel.prime);  // 6/2 = 3
}

TEST_CASE("field-side report mirrors nZ and has no minimal member") {
  FieldSideReport r = field_side_ideals(LatticeSet::z(), 5);
  CHECK(r.classification.prime);
  CHECK(r.classification.maximal);
  CHECK_FALSE(r.minimal_exists);
  CHECK_THROWS_AS(field_side_ideals(LatticeSet::dense(DenseKind::QPos), 5),
                  Unsupported);
}
