#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "schubert/coinvariants.hpp"

using namespace schubert;

namespace {

GroupDatum one_factor(SimpleType t, IsogenyLattice lat, int e, Int p = 0, int central = 0,
                      int degree = 1) {
  GroupDatum g;
  g.char_p = p;
  g.factors.push_back(make_factor(t, lat, central, e, degree));
  return g;
}

GroupDatum pu(int n, Int p = 0) {  // PU_n, ramified quadratic
  return one_factor({Letter::A, n - 1}, IsogenyLattice::adjoint(), 2, p);
}

}  // namespace

TEST_CASE("split factor: coinvariants are the lattice itself") {
  auto L = CoinvariantLattice::build(one_factor({Letter::A, 3}, IsogenyLattice::adjoint(), 1));
  CHECK(L.free_rank() == 3);
  CHECK(L.torsion_divisors().empty());
  // projection is the identity: distinct vectors stay distinct
  CHECK(L.project_single({1, 0, 2}) == L.project_single({1, 0, 2}));
  CHECK(!(L.project_single({1, 0, 2}) == L.project_single({0, 1, 2})));
}

TEST_CASE("tameness validation") {
  CHECK_THROWS_AS(CoinvariantLattice::build(pu(4, 2)), WildRamification);
  CHECK_NOTHROW(CoinvariantLattice::build(pu(4, 3)));
  CHECK_THROWS_AS(one_factor({Letter::A, 2}, IsogenyLattice::adjoint(), 4), InvalidType);
}

TEST_CASE("PU3: rank-1 coinvariants and the a-c projection formula") {
  auto L = CoinvariantLattice::build(pu(3));
  CHECK(L.free_rank() == 1);
  REQUIRE(L.num_nodes() == 1);
  REQUIRE(L.sigma_components().size() == 1);
  CHECK(L.sigma_components()[0].type == SimpleType{Letter::A, 1});

  // lambda = (a,b,c) -> a - c, tested through class equality on a spanning set
  auto cls = [&](Vec eps) { return class_from_eps(L, eps); };
  auto ac = [](const Vec& e) { return e[0] - e[2]; };
  std::vector<Vec> samples = {{1, 0, 0}, {0, 0, -1}, {0, 1, 0}, {1, 1, 0}, {2, 0, 1},
                              {1, 2, 3}, {0, 0, 0},  {5, 1, 2}, {3, 3, 3}};
  for (const auto& x : samples)
    for (const auto& y : samples)
      CHECK((cls(x) == cls(y)) == (ac(x) == ac(y)));

  // both nonzero minuscules map to the quasi-minuscule class = image of a coroot
  CoinvClass qm = L.simple_coroot_class(0);
  CHECK(cls({1, 0, 0}) == qm);
  CHECK(cls({0, 0, -1}) == qm);

  // the middle orbit of A2 has <delta^vee, N(O)> = 1, so the root is doubled
  CHECK(L.norm_scale(0) == 2);
  CHECK(L.pair_node(qm, 0) == 2);
}

TEST_CASE("PU4 and PU_2n: free rank n and the difference formula") {
  for (int n : {2, 3, 4}) {
    auto L = CoinvariantLattice::build(pu(2 * n));
    CHECK(L.free_rank() == n);
    auto cls = [&](const Vec& eps) { return class_from_eps(L, eps); };
    auto formula = [&](const Vec& e) {
      Vec f(n);
      for (int i = 0; i < n; ++i) f[i] = e[i] - e[2 * n - 1 - i];
      return f;
    };
    std::mt19937 rng(7 + n);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
      Vec x(2 * n), y(2 * n);
      for (auto& v : x) v = d(rng);
      for (auto& v : y) v = d(rng);
      CHECK((cls(x) == cls(y)) == (formula(x) == formula(y)));
    }
    // (1,0,...,0) and its omega_1-shifted variant are different classes
    Vec e1(2 * n, 0);
    e1[0] = 1;
    Vec om1(2 * n, 0);
    om1[0] = 1, om1[n] = -1;
    CHECK(!(cls(e1) == cls(om1)));
  }
}

TEST_CASE("echelonnage table for all twisted types") {
  struct Row {
    SimpleType t;
    int e;
    SimpleType expect;
  };
  std::vector<Row> rows = {
      {{Letter::A, 3}, 2, {Letter::B, 2}},  {{Letter::A, 5}, 2, {Letter::B, 3}},
      {{Letter::A, 7}, 2, {Letter::B, 4}},  {{Letter::A, 2}, 2, {Letter::A, 1}},
      {{Letter::A, 4}, 2, {Letter::C, 2}},  {{Letter::A, 6}, 2, {Letter::C, 3}},
      {{Letter::A, 8}, 2, {Letter::C, 4}},  {{Letter::D, 4}, 2, {Letter::C, 3}},
      {{Letter::D, 5}, 2, {Letter::C, 4}},  {{Letter::D, 6}, 2, {Letter::C, 5}},
      {{Letter::D, 4}, 3, {Letter::G, 2}},  {{Letter::E, 6}, 2, {Letter::F, 4}},
  };
  for (const auto& r : rows) {
    std::vector<IsogenyLattice> lats = {IsogenyLattice::simply_connected(),
                                        IsogenyLattice::adjoint()};
    if (r.t.letter == Letter::D && r.e == 2) lats.push_back(IsogenyLattice::so());
    for (const auto& lat : lats) {
      auto L = CoinvariantLattice::build(one_factor(r.t, lat, r.e));
      REQUIRE(L.sigma_components().size() == 1);
      CHECK(L.sigma_components()[0].type == r.expect);
      CHECK(L.sigma_cartan() == cartan_matrix(r.expect));
    }
  }
  // split types keep their own Cartan matrix
  for (SimpleType t : {SimpleType{Letter::B, 3}, SimpleType{Letter::G, 2}}) {
    auto L = CoinvariantLattice::build(one_factor(t, IsogenyLattice::adjoint(), 1));
    CHECK(L.sigma_cartan() == cartan_matrix(t));
  }
  // A_2n with e=2: the doubled root c = 2 appears exactly once
  auto L = CoinvariantLattice::build(one_factor({Letter::A, 4}, IsogenyLattice::adjoint(), 2));
  int doubled = 0;
  for (int i = 0; i < L.num_nodes(); ++i)
    if (L.norm_scale(i) == 2) ++doubled;
  CHECK(doubled == 1);
  // A_2n-1 with e=2: no doubling
  auto L2 = CoinvariantLattice::build(one_factor({Letter::A, 5}, IsogenyLattice::adjoint(), 2));
  for (int i = 0; i < L2.num_nodes(); ++i) CHECK(L2.norm_scale(i) == 1);
}

TEST_CASE("ramified SO_2n carries torsion") {
  auto L = CoinvariantLattice::build(one_factor({Letter::D, 4}, IsogenyLattice::so(), 2, 3));
  CHECK(L.free_rank() == 3);
  REQUIRE(L.torsion_divisors().size() == 1);
  CHECK(L.torsion_divisors()[0] == 2);
  // epsilon_n generates the torsion
  auto t = class_from_eps(L, {0, 0, 0, 1});
  CHECK(is_zero(t.free_part));
  CHECK(t.torsion == Vec{1});
  CHECK(L.add(t, t) == L.zero());
  // torsion pairs to zero with every echelonnage root
  for (int i = 0; i < L.num_nodes(); ++i) CHECK(L.pair_node(t, i) == 0);
}

TEST_CASE("norm map: orbit sums and identity in the split case") {
  auto L = CoinvariantLattice::build(pu(3));
  auto qm = L.simple_coroot_class(0);
  // N((1,0,0)-class) = (1,0,0)+(0,0,-1) = (1,0,-1): pairs to 4 with 2rho
  Vec nm = L.norm_map(qm);
  const auto& d = L.group().factors[0].datum;
  CHECK(dot(nm, d.two_rho) == 4);
  CHECK(L.norm_map(L.zero()) == Vec(nm.size(), 0));
  auto Ls = CoinvariantLattice::build(one_factor({Letter::A, 2}, IsogenyLattice::adjoint(), 1));
  Vec x = *Ls.group().factors[0].datum.from_weight_coords({2, 1});
  CHECK(Ls.norm_map(Ls.project_single(x)) == x);
}

TEST_CASE("pi1 coinvariants") {
  auto sc = CoinvariantLattice::build(
      one_factor({Letter::D, 5}, IsogenyLattice::simply_connected(), 1));
  CHECK(sc.pi1_torsion_order() == 1);
  for (int n : {1, 2, 3, 5}) {
    auto L = CoinvariantLattice::build(one_factor({Letter::A, n}, IsogenyLattice::adjoint(), 1));
    CHECK(L.pi1_torsion_order() == n + 1);
    CHECK((int)L.torsion_components().size() == n + 1);
  }
  CHECK(CoinvariantLattice::build(pu(3)).pi1_torsion_order() == 1);
  auto e6 = CoinvariantLattice::build(one_factor({Letter::E, 6}, IsogenyLattice::adjoint(), 2));
  CHECK(e6.pi1_torsion_order() == 1);
  auto d43 = CoinvariantLattice::build(one_factor({Letter::D, 4}, IsogenyLattice::adjoint(), 3));
  CHECK(d43.pi1_torsion_order() == 1);
  CHECK(CoinvariantLattice::build(pu(8)).pi1_torsion_order() == 2);
  auto so = CoinvariantLattice::build(one_factor({Letter::D, 4}, IsogenyLattice::so(), 2, 3));
  CHECK(so.pi1_torsion_order() == 2);
  auto d4 = CoinvariantLattice::build(one_factor({Letter::D, 4}, IsogenyLattice::adjoint(), 1));
  CHECK(d4.pi1_torsion_order() == 4);
  CHECK((int)d4.torsion_components().size() == 4);
}

TEST_CASE("component_of kills the coroot classes") {
  auto L = CoinvariantLattice::build(one_factor({Letter::A, 3}, IsogenyLattice::adjoint(), 1));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    Vec x(3);
    for (auto& v : x) v = d(rng);
    auto cx = L.project_single(x);
    CHECK(L.component_of(cx) ==
          L.component_of(L.add(cx, L.simple_coroot_class(trial % 3))));
  }
}

TEST_CASE("adjoint image") {
  // central class maps to zero
  auto L =
      CoinvariantLattice::build(one_factor({Letter::A, 2}, IsogenyLattice::adjoint(), 1, 0, 1));
  Vec central(3, 0);
  central[2] = 5;
  auto img = L.adjoint_image(L.project_single(central));
  CHECK(L.adjoint_lattice().zero() == img);
  // adjoint semisimple input maps to itself
  auto Lad = CoinvariantLattice::build(pu(4));
  auto c = class_from_eps(Lad, {1, 0, 0, 0});
  CHECK(Lad.adjoint_image(c) == c);
  // GL_n-style coweight: omega_1 plus a central vector maps to the omega_1 class
  Vec e1c(3, 0);
  e1c[0] = 1;  // omega_1 in weight coords of A2, central part 0
  auto mixed = L.project_single(add(e1c, central));
  auto pure = L.adjoint_lattice().project_single({1, 0});
  CHECK(L.adjoint_image(mixed) == pure);
}

TEST_CASE("projection reaches all torsion values") {
  auto L = CoinvariantLattice::build(one_factor({Letter::D, 4}, IsogenyLattice::so(), 2, 3));
  std::set<Vec> torsion_seen;
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Vec eps(4);
    for (auto& v : eps) v = d(rng);
    torsion_seen.insert(class_from_eps(L, eps).torsion);
  }
  CHECK(torsion_seen.size() == 2);
}

TEST_CASE("restriction of scalars collapses and sums embeddings") {
  GroupDatum g = one_factor({Letter::A, 2}, IsogenyLattice::adjoint(), 2, 0, 0, 2);
  auto L = CoinvariantLattice::build(g);
  CHECK(L.free_rank() == 1);  // same as PU3 itself
  const auto& dat = g.factors[0].datum;
  Vec a = *dat.from_weight_coords({1, 0});
  Vec b = *dat.from_weight_coords({0, 1});
  auto sum = L.project({{a, b}});
  auto sep = L.add(L.project({{a, Vec(3, 0)}}), L.project({{Vec(3, 0), b}}));
  CHECK(sum == sep);
  CHECK_THROWS_AS(L.project({{a}}), DimensionMismatch);
}

TEST_CASE("two-factor group concatenates") {
  GroupDatum g;
  g.factors.push_back(make_factor({Letter::A, 1}, IsogenyLattice::adjoint(), 0, 1, 1));
  g.factors.push_back(make_factor({Letter::B, 2}, IsogenyLattice::simply_connected(), 0, 1, 1));
  auto L = CoinvariantLattice::build(g);
  CHECK(L.free_rank() == 3);
  CHECK(L.num_nodes() == 3);
  REQUIRE(L.sigma_components().size() == 2);
  CHECK(L.sigma_components()[0].type == SimpleType{Letter::A, 1});
  CHECK(L.sigma_components()[1].type == SimpleType{Letter::B, 2});
  CHECK(L.pi1_torsion_order() == 2);  // PGL2 x Spin5
}

TEST_CASE("SO4 as the D2 datum") {
  auto L = CoinvariantLattice::build(one_factor({Letter::D, 2}, IsogenyLattice::so(), 1, 2));
  CHECK(L.free_rank() == 2);
  CHECK(L.num_nodes() == 2);
  CHECK(L.sigma_components().size() == 2);
  CHECK(L.pi1_torsion_order() == 2);
  // dominant cochars (a,b) have pairings (a-b, a+b): (1,0) gives (1,1)
  auto c = class_from_eps(L, {1, 0});
  CHECK(L.dominant(c));
  Vec pr = L.node_pairings(c);
  std::sort(pr.begin(), pr.end());
  CHECK(pr == Vec({1, 1}));
}
