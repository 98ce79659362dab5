#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schubert/rootdata.hpp"

// Tame Galois twists and the coinvariant lattice X_*(T)_I.
//
// Every factor is a (possibly twisted) absolute root datum; a restriction
// of scalars collapses to a single copy of the underlying coinvariants, the
// summation over embeddings happening in project(). The coinvariants carry
// a canonical normal form obtained from the Smith form of (sigma - 1):
// a free part in fixed integer coordinates and torsion residues, so class
// equality is decidable. The echelonnage root system is generated from the
// projected simple coroots and the scaled orbit-norm characters.

namespace schubert {

struct TwistedFactor {
  RootDatumAbs datum;
  int twist_order = 1;
  std::vector<int> sigma0;     // permutation of simple indices, order = twist_order
  int restriction_degree = 1;  // number of embeddings of Res_{F_j/F}
};

TwistedFactor make_factor(const SimpleType& t, const IsogenyLattice& lat, int central_rank,
                          int twist_order, int restriction_degree);

struct GroupDatum {
  std::vector<TwistedFactor> factors;
  Int char_p = 0;  // 0 or a prime

  int num_factors() const { return (int)factors.size(); }
};

// Tameness and factor validity; throws on failure.
void validate_group(const GroupDatum& g);

// A coweight of the group: one absolute coweight per embedding per factor.
using GroupCoweight = std::vector<std::vector<Vec>>;

struct CoinvClass {
  Vec free_part;
  Vec torsion;

  bool operator==(const CoinvClass&) const = default;
  bool operator<(const CoinvClass& o) const {
    if (free_part != o.free_part) return free_part < o.free_part;
    return torsion < o.torsion;
  }
};

struct SigmaComponent {
  SimpleType type{Letter::A, 1};
  std::vector<int> nodes;  // global echelonnage node ids, Bourbaki order
  int factor = 0;
};

struct EchRoot {
  CoinvClass coroot;
  Vec root_coeffs;    // coordinates over the simple echelonnage roots
  Vec coroot_coeffs;  // coordinates over the simple echelonnage coroots
};

class CoinvariantLattice {
 public:
  static CoinvariantLattice build(const GroupDatum& g);

  const GroupDatum& group() const { return group_; }
  int free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion_divisors() const { return torsion_divisors_; }

  // --- classes ---
  CoinvClass zero() const;
  CoinvClass add(const CoinvClass& a, const CoinvClass& b) const;
  CoinvClass sub(const CoinvClass& a, const CoinvClass& b) const;
  CoinvClass neg(const CoinvClass& a) const;
  CoinvClass mul(Int k, const CoinvClass& a) const;

  // projection res_I; the tuple shape must match factors/embeddings
  CoinvClass project(const GroupCoweight& mu) const;
  CoinvClass project_single(const Vec& mu) const;  // one factor, degree 1

  // a distinguished lift of the class to X (concatenated over factors)
  Vec lift(const CoinvClass& c) const;

  // N_I: sum of the sigma-orbit of a lift, per factor; an invariant coweight
  Vec norm_map(const CoinvClass& c) const;

  // image in the coinvariants of the adjoint group of the same type
  const CoinvariantLattice& adjoint_lattice() const;
  CoinvClass adjoint_image(const CoinvClass& c) const;

  // --- echelonnage system ---
  int num_nodes() const { return (int)node_coroot_.size(); }
  const CoinvClass& simple_coroot_class(int node) const { return node_coroot_[node]; }
  Int norm_scale(int node) const { return node_scale_[node]; }       // the factor c_i
  const std::vector<int>& orbit(int node) const { return node_orbit_[node]; }
  int node_factor(int node) const { return node_factor_[node]; }
  const std::vector<SigmaComponent>& sigma_components() const { return components_; }
  const Mat& sigma_cartan() const { return sigma_cartan_; }

  // pairing of a class with the node-th simple echelonnage root a_node
  Int pair_node(const CoinvClass& c, int node) const;
  // pairing with an arbitrary echelonnage root given by coefficients
  Int pair_root_coeffs(const CoinvClass& c, const Vec& m) const;

  bool dominant(const CoinvClass& c) const;

  // all positive echelonnage roots (coefficient vectors over the simple ones)
  const std::vector<EchRoot>& positive_ech_roots() const { return pos_roots_; }

  // <2rho, .> with 2rho the sum of positive absolute roots
  Int two_rho_pair(const CoinvClass& c) const;

  // --- components / pi_1(G)_I ---
  // torsion part of pi_1(G)_I as elementary divisors (central torus adds
  // free rank equal to the total central rank)
  const std::vector<Int>& pi1_divisors() const { return pi1_divisors_; }
  Int pi1_torsion_order() const;
  int central_rank() const { return central_rank_; }

  // canonical encoding of the component of a class: torsion residues of the
  // Kottwitz image followed by the central free coordinates
  Vec component_of(const CoinvClass& c) const;
  // torsion components only (finitely many), sorted; index of a class
  std::vector<Vec> torsion_components() const;
  int component_index(const CoinvClass& c) const;

  // display over the fundamental coweights of the echelonnage system:
  // pairings with the simple roots, e.g. "w1+2*w3", with a torsion tag
  // when the free pairing data does not determine the class
  std::string display(const CoinvClass& c) const;

  // dominant pairing vector (one entry per node)
  Vec node_pairings(const CoinvClass& c) const;

 private:
  struct FactorData {
    TwistedFactor factor;
    Mat sigma;              // N x N action on X
    Mat u, u_inv;           // smith of (sigma - 1): u * R * v = s
    std::vector<int> torsion_rows;
    std::vector<Int> torsion_mods;
    std::vector<int> free_rows;
    std::vector<int> kill_rows;  // divisor 1
    // pi_1 data: smith of [R | simple coroots]
    Mat pi1_u;
    std::vector<int> pi1_torsion_rows;
    std::vector<Int> pi1_torsion_mods;
    std::vector<int> pi1_free_rows;
    int free_offset = 0, torsion_offset = 0;
  };

  GroupDatum group_;
  std::vector<FactorData> fdata_;
  int free_rank_ = 0;
  int central_rank_ = 0;
  std::vector<Int> torsion_divisors_;
  std::vector<Int> pi1_divisors_;

  std::vector<CoinvClass> node_coroot_;
  std::vector<Vec> node_root_cov_;  // covector on the concatenated X
  std::vector<Int> node_scale_;
  std::vector<std::vector<int>> node_orbit_;
  std::vector<int> node_factor_;
  std::vector<SigmaComponent> components_;
  Mat sigma_cartan_;
  std::vector<EchRoot> pos_roots_;
  std::vector<Vec> two_rho_;  // per factor

  mutable std::shared_ptr<CoinvariantLattice> adjoint_;
  bool is_adjoint_shape_ = false;

  CoinvClass project_factor_sum(int f, const std::vector<Vec>& mus) const;
  Vec lift_factor(const CoinvClass& c, int f) const;
  friend struct CoinvBuilder;
};

// Convenience: class from epsilon coordinates of a single-factor group.
CoinvClass class_from_eps(const CoinvariantLattice& L, const Vec& eps);

}  // namespace schubert
