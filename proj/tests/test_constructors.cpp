#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "smalg/constructors.hpp"
#include "smalg/group_ring.hpp"
#include "smalg/quaternion.hpp"
#include "smalg/trunc_poly.hpp"

using namespace smalg;

TEST_CASE("cyclic groups") {
  CHECK(cyclic(1).size() == 1);
  CHECK(check_group(cyclic(1)).ok());
  for (int n : {2, 3, 8, 12}) {
    FiniteMagma g = cyclic(n);
    CHECK(g.size() == n);
    CHECK(check_group(g).ok());
    CHECK(check_commutative(g).ok());
  }
  CHECK_THROWS_AS(cyclic(0), SizeGuard);
}

TEST_CASE("dihedral groups") {
  for (int m : {1, 2, 3, 5, 8}) {
    FiniteMagma g = dihedral(m);
    CHECK(g.size() == 2 * m);
    CHECK(check_group(g).ok());
  }
  CHECK_FALSE(check_commutative(dihedral(3)).ok());
  // s r s = r^{-1} in D_3: index m+j is s r^j
  FiniteMagma d3 = dihedral(3);
  ElementId s = 3, r = 1;
  CHECK(d3.at(d3.at(s, r), s) == 2);  // r^{-1} = r^2
}

TEST_CASE("symmetric groups compose left-first") {
  FiniteMagma s3 = symmetric_group(3);
  CHECK(s3.size() == 6);
  CHECK(check_group(s3).ok());
  CHECK_FALSE(check_commutative(s3).ok());
  CHECK(symmetric_group(4).size() == 24);
  CHECK_THROWS_AS(symmetric_group(7), SizeGuard);
}

TEST_CASE("full transformation semigroup S(n)") {
  FiniteMagma s2 = symmetric_semigroup(2);
  CHECK(s2.size() == 4);
  CHECK(check_semigroup(s2).ok());
  CHECK_FALSE(check_group(s2).ok());
  CHECK(symmetric_semigroup(3).size() == 27);
  CHECK(check_semigroup(symmetric_semigroup(3)).ok());

  // (f o g)(x) = g(f(x)): constant map then swap gives the other constant
  auto idx = [&](const std::string& lab) {
    for (int i = 0; i < s2.size(); ++i)
      if (s2.labels[i] == lab) return i;
    FAIL("missing label " + lab);
    return -1;
  };
  ElementId const1 = idx("[1 1]"), swap = idx("[2 1]"), const2 = idx("[2 2]");
  CHECK(s2.at(const1, swap) == const2);
  CHECK(s2.at(swap, const1) == const1);
}

TEST_CASE("matrix rings") {
  FiniteRingTable m2z2 = matrix_ring(build_zn(2), 2);
  CHECK(m2z2.size() == 16);
  CHECK(check_ring(m2z2).ok());
  CHECK_FALSE(check_commutative_ring(m2z2).ok());
  CHECK(check_ring(matrix_ring(build_zn(3), 1)).ok());
  CHECK_THROWS_AS(matrix_ring(build_zn(2), 3), SizeGuard);
  CHECK_THROWS_AS(matrix_ring(build_zn(9), 2), SizeGuard);
}

TEST_CASE("lattice semiring wrapper verifies the axioms") {
  // chain 0 < 1 < 2 with join/meet
  std::vector<std::vector<ElementId>> join = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  std::vector<std::vector<ElementId>> meet = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  FiniteRingTable l = lattice_semiring({"0", "a", "1"}, join, meet);
  CHECK(check_semiring(l).ok());
  // a broken table is rejected
  std::vector<std::vector<ElementId>> bad = {{1, 1, 2}, {0, 1, 2}, {2, 2, 0}};
  CHECK_THROWS_AS(lattice_semiring({"0", "a", "1"}, join, bad), AxiomFailure);
}

TEST_CASE("group ring over Z_2 x S(2) has 16 elements") {
  GroupRingAlgebra alg = semigroup_ring(CoeffRing{2}, symmetric_semigroup(2));
  auto all = alg.enumerate();
  CHECK(all.size() == 16);
  // brute-force convolution oracle on random pairs
  std::mt19937 rng(11);
  const FiniteMagma& base = alg.base();
  for (int t = 0; t < 100; ++t) {
    const SupportedSum& a = all[rng() % all.size()];
    const SupportedSum& b = all[rng() % all.size()];
    std::vector<std::int64_t> acc(base.size(), 0);
    for (ElementId g = 0; g < base.size(); ++g)
      for (ElementId h = 0; h < base.size(); ++h) {
        auto ita = a.terms.find(g);
        auto itb = b.terms.find(h);
        if (ita != a.terms.end() && itb != b.terms.end())
          acc[base.at(g, h)] += ita->second * itb->second;
      }
    SupportedSum expect;
    for (ElementId g = 0; g < base.size(); ++g)
      if (acc[g] % 2 != 0) expect.terms[g] = 1;
    CHECK(alg.mul(a, b) == expect);
  }
}

TEST_CASE("group ring identity and Z coefficients") {
  GroupRingAlgebra zg = group_ring(CoeffRing{0}, cyclic(3));
  auto one = zg.one();
  REQUIRE(one.has_value());
  SupportedSum x = zg.make({{1, 2}, {2, -1}});
  CHECK(zg.mul(*one, x) == x);
  CHECK(zg.mul(x, *one) == x);
  CHECK_THROWS_AS(zg.enumerate(), SizeGuard);
  // (g - g^2)(g + g^2) = g^2 - g^4 = g^2 - g
  SupportedSum a = zg.make({{1, 1}, {2, -1}});
  SupportedSum b = zg.make({{1, 1}, {2, 1}});
  CHECK(zg.mul(a, b) == zg.make({{2, 1}, {1, -1}}));
}

TEST_CASE("quaternion unit table and associativity") {
  Quaternion one{1, 0, 0, 0}, i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  Quaternion m1{-1, 0, 0, 0};
  auto neg = [](const Quaternion& q) {
    return Quaternion{-q.a0, -q.a1, -q.a2, -q.a3};
  };
  CHECK(quaternion_mul(i, j) == k);
  CHECK(quaternion_mul(j, k) == i);
  CHECK(quaternion_mul(k, i) == j);
  CHECK(quaternion_mul(j, i) == neg(k));
  CHECK(quaternion_mul(k, j) == neg(i));
  CHECK(quaternion_mul(i, k) == neg(j));
  CHECK(quaternion_mul(i, i) == m1);
  CHECK(quaternion_mul(j, j) == m1);
  CHECK(quaternion_mul(k, k) == m1);

  // all 36 signed unit products
  std::vector<Quaternion> units = {one, i, j, k, m1, neg(i), neg(j), neg(k)};
  for (const Quaternion& a : units)
    for (const Quaternion& b : units) {
      Quaternion p = quaternion_mul(a, b);
      bool is_signed_unit = false;
      for (const Quaternion& u : units) is_signed_unit |= (p == u);
      CHECK(is_signed_unit);
    }

  std::mt19937 rng(3);
  auto rnd = [&]() {
    auto c = [&]() { return static_cast<std::int64_t>(rng() % 21) - 10; };
    return Quaternion{c(), c(), c(), c()};
  };
  for (int t = 0; t < 1000; ++t) {
    Quaternion a = rnd(), b = rnd(), c = rnd();
    CHECK(quaternion_mul(quaternion_mul(a, b), c) ==
          quaternion_mul(a, quaternion_mul(b, c)));
  }
}

TEST_CASE("truncated polynomial algebra x^6 = 1") {
  TruncPolyAlgebra alg(5);
  // (x^5 + 3x^3 - 4x + 1)(3x^5 + 2x^2 - 7), constant term first
  TruncPoly p = {Rat(1), Rat(-4), Rat(0), Rat(3), Rat(0), Rat(1)};
  TruncPoly q = {Rat(-7), Rat(0), Rat(2), Rat(0), Rat(0), Rat(3)};
  TruncPoly expect = {Rat(-19), Rat(30), Rat(11), Rat(-29), Rat(3), Rat(2)};
  CHECK(trunc_poly_mul(alg, p, q) == expect);
  CHECK(trunc_poly_mul(alg, q, p) == expect);
  // x^3 * x^4 = x^7 = x
  TruncPoly x3(4, Rat(0)), x4(5, Rat(0));
  x3[3] = Rat(1);
  x4[4] = Rat(1);
  TruncPoly x(6, Rat(0));
  x[1] = Rat(1);
  CHECK(trunc_poly_mul(alg, x3, x4) == x);
  CHECK_THROWS_AS(trunc_poly_mul(alg, TruncPoly(7, Rat(1)), x3), SizeGuard);
}
