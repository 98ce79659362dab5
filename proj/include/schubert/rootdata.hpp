#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/intlin.hpp"

// Absolute root data in Bourbaki conventions.
//
// Internally every lattice element is an integer vector in the basis of the
// chosen cocharacter lattice X ("internal coordinates"); characters are
// integer covectors on those coordinates. Bourbaki epsilon-coordinates are
// provided as an I/O convenience for the classical types.

namespace schubert {

enum class Letter { A, B, C, D, E, F, G };

char letter_char(Letter l);
Letter letter_from_char(char c);

struct SimpleType {
  Letter letter;
  int rank;

  bool operator==(const SimpleType&) const = default;
};

// Valid ranks: A n>=1, B n>=2, C n>=2, D n>=4, E 6..8, F 4, G 2.
// D2 (= A1+A1, the root datum of SO4) is additionally admitted so that the
// orthogonal group SO4 can be expressed; see so4-related tests.
bool is_valid_type(const SimpleType& t);
void require_valid_type(const SimpleType& t);

// Cartan matrix C with C(i,j) = <alpha_j, alpha_i^vee>, Bourbaki numbering.
Mat cartan_matrix(const SimpleType& t);

// Order of P^vee / Q^vee, equal to |det| of the Cartan matrix.
Int connection_index(const SimpleType& t);

std::string type_to_string(const SimpleType& t);

enum class LatticeKind { SimplyConnected, Adjoint, SO, HalfSpin, HalfSpinPrime, Explicit };

struct IsogenyLattice {
  LatticeKind kind = LatticeKind::SimplyConnected;
  // For Explicit: columns are a basis of X in fundamental-coweight
  // coordinates; must satisfy Q^vee <= X <= P^vee.
  Mat basis;

  static IsogenyLattice simply_connected() { return {LatticeKind::SimplyConnected, Mat()}; }
  static IsogenyLattice adjoint() { return {LatticeKind::Adjoint, Mat()}; }
  static IsogenyLattice so() { return {LatticeKind::SO, Mat()}; }
  static IsogenyLattice half_spin() { return {LatticeKind::HalfSpin, Mat()}; }
  static IsogenyLattice half_spin_prime() { return {LatticeKind::HalfSpinPrime, Mat()}; }
  static IsogenyLattice explicit_basis(Mat b) { return {LatticeKind::Explicit, std::move(b)}; }
};

std::string lattice_to_string(const IsogenyLattice& lat);

struct FundamentalCoweight {
  std::vector<Rat> coords;  // internal coordinates, rational
  bool in_lattice = false;  // integral in internal coordinates
};

struct RootDatumAbs {
  SimpleType type{Letter::A, 1};
  LatticeKind lattice_kind = LatticeKind::SimplyConnected;
  int central_rank = 0;

  // Basis of X inside P^vee, in fundamental-coweight coordinates (n x n).
  Mat basis;

  // Simple coroots as columns (N x n) and simple roots as rows (n x N),
  // N = n + central_rank.
  Mat simple_coroots;
  Mat simple_roots;

  // All positive roots/coroots of the absolute system, as
  // (root covector, coroot vector) pairs; index 0..n-1 are the simple ones.
  std::vector<Vec> positive_roots;
  std::vector<Vec> positive_coroots;

  Vec two_rho;  // sum of positive roots, a covector of length N

  int ss_rank() const { return type.rank; }
  int dim() const { return type.rank + central_rank; }

  Vec simple_coroot(int i) const { return simple_coroots.col(i); }
  Vec simple_root(int i) const { return simple_roots.row(i); }

  // Fundamental coweights omega_i in internal coordinates (central part 0).
  std::vector<FundamentalCoweight> fundamental_coweights() const;

  // Internal coordinates of an element given by its fundamental-coweight
  // coordinates p (length n); nullopt when the element is not in X.
  std::optional<Vec> from_weight_coords(const Vec& p) const;

  // Fundamental-coweight coordinates of an internal vector: the pairings
  // with the simple roots.
  Vec weight_coords(const Vec& x) const;
};

// [X : Q^vee] for the datum (index of the coroot lattice in X).
Int coroot_index(const RootDatumAbs& d);

RootDatumAbs build_root_datum(const SimpleType& t, const IsogenyLattice& lat, int central_rank);

inline Int pairing(const Vec& mu, const Vec& chi) { return dot(mu, chi); }

// <2rho, x>; for x = mu - la with la <= mu this is the Schubert dimension.
Int two_rho_pairing(const RootDatumAbs& d, const Vec& x);

// Diagram automorphism of order e in Bourbaki numbering (permutation of
// simple-root indices). Valid pairs: (any,1), (A_n,2) n>=2, (D_n,2) n>=4,
// (D_4,3), (E_6,2).
std::vector<int> diagram_automorphism(const SimpleType& t, int twist_order);

// Action of the diagram automorphism on internal coordinates of X
// (identity on central coordinates). Throws InvalidLattice when X is not
// stable under the automorphism.
Mat twist_action(const RootDatumAbs& d, const std::vector<int>& sigma0);

// Bourbaki epsilon-coordinate conversions, classical types only.
// Type A uses vectors of length n+1 (adjoint: modulo (1,..,1)); B/C/D use
// length n. Central coordinates are appended unchanged when present.
std::optional<Vec> eps_to_internal(const RootDatumAbs& d, const Vec& eps);

}  // namespace schubert
