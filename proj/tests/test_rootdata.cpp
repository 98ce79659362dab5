#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schubert/rootdata.hpp"

using namespace schubert;

namespace {
const SimpleType A2{Letter::A, 2};
const SimpleType B2{Letter::B, 2};
const SimpleType B3{Letter::B, 3};
const SimpleType D4{Letter::D, 4};
}  // namespace

TEST_CASE("type validity") {
  CHECK(is_valid_type({Letter::A, 1}));
  CHECK(!is_valid_type({Letter::B, 1}));
  CHECK(!is_valid_type({Letter::D, 3}));
  CHECK(is_valid_type({Letter::D, 2}));
  CHECK(is_valid_type({Letter::E, 7}));
  CHECK(!is_valid_type({Letter::E, 9}));
  CHECK(!is_valid_type({Letter::F, 5}));
  CHECK_THROWS_AS(cartan_matrix({Letter::G, 3}), InvalidType);
}

TEST_CASE("connection indices match Cartan determinants") {
  CHECK(connection_index({Letter::A, 5}) == 6);
  CHECK(connection_index({Letter::B, 4}) == 2);
  CHECK(connection_index({Letter::C, 3}) == 2);
  CHECK(connection_index({Letter::D, 6}) == 4);
  CHECK(connection_index({Letter::D, 2}) == 4);
  CHECK(connection_index({Letter::E, 6}) == 3);
  CHECK(connection_index({Letter::E, 7}) == 2);
  CHECK(connection_index({Letter::E, 8}) == 1);
  CHECK(connection_index({Letter::F, 4}) == 1);
  CHECK(connection_index({Letter::G, 2}) == 1);
}

TEST_CASE("positive root counts") {
  auto count = [](SimpleType t) {
    return build_root_datum(t, IsogenyLattice::adjoint(), 0).positive_roots.size();
  };
  CHECK(count({Letter::A, 3}) == 6);
  CHECK(count({Letter::B, 3}) == 9);
  CHECK(count({Letter::C, 4}) == 16);
  CHECK(count({Letter::D, 4}) == 12);
  CHECK(count({Letter::G, 2}) == 6);
  CHECK(count({Letter::F, 4}) == 24);
  CHECK(count({Letter::E, 6}) == 36);
}

TEST_CASE("pairing examples") {
  auto d = build_root_datum(B2, IsogenyLattice::simply_connected(), 0);
  // Cartan diagonal
  CHECK(pairing(d.simple_coroot(0), d.simple_root(0)) == 2);
  // Bourbaki B2 entry <alpha_1^vee, alpha_2> = -1
  CHECK(pairing(d.simple_coroot(0), d.simple_root(1)) == -1);
  CHECK(pairing(d.simple_coroot(1), d.simple_root(0)) == -2);
  CHECK(pairing(Vec{0, 0}, d.simple_root(1)) == 0);
}

TEST_CASE("lattice indices via Smith normal form") {
  // A2 adjoint: [X : Q^vee] = 3
  auto ad = build_root_datum(A2, IsogenyLattice::adjoint(), 0);
  CHECK(coroot_index(ad) == 3);
  // simply connected: X = Q^vee
  auto sc = build_root_datum(A2, IsogenyLattice::simply_connected(), 0);
  CHECK(coroot_index(sc) == 1);
  // D4 SO: [X : Q^vee] = 2 and [P^vee : X] = 2
  auto so = build_root_datum(D4, IsogenyLattice::so(), 0);
  CHECK(coroot_index(so) == 2);
  CHECK(abs_det(so.basis) == 2);
  // the three index-2 lattices in P/Q = (Z/2)^2 are SO and the two half-spins
  auto hs = build_root_datum(D4, IsogenyLattice::half_spin(), 0);
  auto hsp = build_root_datum(D4, IsogenyLattice::half_spin_prime(), 0);
  CHECK(coroot_index(hs) == 2);
  CHECK(coroot_index(hsp) == 2);
  CHECK(abs_det(hs.basis) == 2);
  CHECK(abs_det(hsp.basis) == 2);

  CHECK_THROWS_AS(build_root_datum(A2, IsogenyLattice::so(), 0), InvalidLattice);
  CHECK_THROWS_AS(build_root_datum({Letter::D, 5}, IsogenyLattice::half_spin(), 0),
                  InvalidLattice);
}

TEST_CASE("explicit lattice validation") {
  // basis must contain Q^vee: the identity works for any type (adjoint)
  CHECK_NOTHROW(build_root_datum(A2, IsogenyLattice::explicit_basis(Mat::identity(2)), 0));
  // 2 * P^vee does not contain Q^vee of A1 (alpha^vee = 2 omega is in it) but
  // 3 * P^vee of A1 does not contain alpha^vee = 2 omega
  Mat three = Mat::from_rows({{3}});
  CHECK_THROWS_AS(build_root_datum({Letter::A, 1}, IsogenyLattice::explicit_basis(three), 0),
                  InvalidLattice);
}

TEST_CASE("fundamental coweights pair to delta against simple roots") {
  for (SimpleType t : {A2, B3, D4, SimpleType{Letter::G, 2}, SimpleType{Letter::F, 4}}) {
    for (auto lat : {IsogenyLattice::adjoint(), IsogenyLattice::simply_connected()}) {
      auto d = build_root_datum(t, lat, 0);
      auto fw = d.fundamental_coweights();
      for (int i = 0; i < t.rank; ++i) {
        for (int j = 0; j < t.rank; ++j) {
          Rat sum(0);
          for (int k = 0; k < d.dim(); ++k)
            sum = sum + fw[i].coords[k] * Rat(d.simple_root(j)[k]);
          CHECK(sum == Rat(i == j ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("fundamental coweight lattice membership") {
  auto ad = build_root_datum(A2, IsogenyLattice::adjoint(), 0);
  for (auto& f : ad.fundamental_coweights()) CHECK(f.in_lattice);
  auto sc = build_root_datum(A2, IsogenyLattice::simply_connected(), 0);
  auto fw = sc.fundamental_coweights();
  CHECK(!fw[0].in_lattice);
  CHECK(!fw[1].in_lattice);
}

TEST_CASE("two_rho pairs to twice the height on positive coroots") {
  for (SimpleType t : {A2, B3, SimpleType{Letter::C, 3}, D4, SimpleType{Letter::G, 2}}) {
    auto d = build_root_datum(t, IsogenyLattice::adjoint(), 0);
    // height of a coroot = sum of its coefficients over the simple coroots
    Mat sc = d.simple_coroots;
    for (const Vec& cv : d.positive_coroots) {
      auto coeff = solve_integer_unique(sc, cv);
      REQUIRE(coeff);
      Int h = 0;
      for (Int c : *coeff) h += c;
      CHECK(two_rho_pairing(d, cv) == 2 * h);
    }
  }
}

TEST_CASE("schubert dimension examples at the absolute level") {
  // PGL2: <2rho, alpha^vee> = 2
  auto a1 = build_root_datum({Letter::A, 1}, IsogenyLattice::adjoint(), 0);
  CHECK(two_rho_pairing(a1, a1.positive_coroots[0]) == 2);
  // PGL3: <2rho, theta^vee> = 4
  auto a2 = build_root_datum(A2, IsogenyLattice::adjoint(), 0);
  CHECK(two_rho_pairing(a2, a2.positive_coroots.back()) == 4);
}

TEST_CASE("diagram automorphisms") {
  CHECK(diagram_automorphism({Letter::A, 3}, 2) == std::vector<int>({2, 1, 0}));
  CHECK(diagram_automorphism(D4, 2) == std::vector<int>({0, 1, 3, 2}));
  CHECK(diagram_automorphism(D4, 3) == std::vector<int>({2, 1, 3, 0}));
  CHECK(diagram_automorphism({Letter::E, 6}, 2) == std::vector<int>({5, 1, 4, 3, 2, 0}));
  CHECK_THROWS_AS(diagram_automorphism({Letter::A, 1}, 2), InvalidType);
  CHECK_THROWS_AS(diagram_automorphism(B3, 2), InvalidType);

  // automorphism preserves the Cartan matrix
  for (auto [t, e] : std::vector<std::pair<SimpleType, int>>{
           {{Letter::A, 4}, 2}, {{Letter::D, 5}, 2}, {D4, 3}, {{Letter::E, 6}, 2}}) {
    Mat c = cartan_matrix(t);
    auto p = diagram_automorphism(t, e);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) CHECK(c(p[i], p[j]) == c(i, j));
  }
}

TEST_CASE("twist action is integral on stable lattices and rejects unstable ones") {
  auto sig = diagram_automorphism(D4, 2);
  for (auto lat : {IsogenyLattice::simply_connected(), IsogenyLattice::adjoint(),
                   IsogenyLattice::so()}) {
    auto d = build_root_datum(D4, lat, 0);
    Mat s = twist_action(d, sig);
    CHECK(s * s == Mat::identity(4));
  }
  auto hs = build_root_datum(D4, IsogenyLattice::half_spin(), 0);
  CHECK_THROWS_AS(twist_action(hs, sig), InvalidLattice);
}

TEST_CASE("epsilon coordinate round trips") {
  // A2 adjoint: (1,0,0) has weight coords (1,0) = omega_1
  auto ad = build_root_datum(A2, IsogenyLattice::adjoint(), 0);
  auto x = eps_to_internal(ad, {1, 0, 0});
  REQUIRE(x);
  CHECK(ad.weight_coords(*x) == Vec({1, 0}));
  // shifting by (1,1,1) gives the same class
  CHECK(eps_to_internal(ad, {2, 1, 1}) == x);

  // A2 sc: (1,0,-1) = theta^vee is in the lattice, (1,0,0) is not
  auto sc = build_root_datum(A2, IsogenyLattice::simply_connected(), 0);
  CHECK(eps_to_internal(sc, {1, 0, -1}));
  CHECK(!eps_to_internal(sc, {1, 0, 0}));

  // D4 SO: e1 is in the lattice, the half-spin vector is not expressible
  auto so = build_root_datum(D4, IsogenyLattice::so(), 0);
  auto e1 = eps_to_internal(so, {1, 0, 0, 0});
  REQUIRE(e1);
  CHECK(so.weight_coords(*e1) == Vec({1, 0, 0, 0}));

  // central coordinates pass through
  auto adc = build_root_datum(A2, IsogenyLattice::adjoint(), 1);
  auto xc = eps_to_internal(adc, {1, 0, 0, 7});
  REQUIRE(xc);
  CHECK((*xc)[2] == 7);
}
