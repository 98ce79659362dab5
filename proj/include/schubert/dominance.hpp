#pragma once

#include <string>
#include <vector>

#include "schubert/coinvariants.hpp"

// The Bruhat (dominance) order on dominant coinvariant classes:
// la <= mu iff mu - la is a nonnegative integral combination of the simple
// echelonnage coroots (with matching torsion). Minuscule and quasi-minuscule
// elements, supports, covers and Hasse segments.

namespace schubert {

struct DominantClass {
  CoinvClass cls;
};

DominantClass make_dominant(const CoinvariantLattice& L, const CoinvClass& c);

// Nonnegative integral coroot coefficients of mu - la, when la <= mu.
std::optional<Vec> leq_coeffs(const CoinvariantLattice& L, const CoinvClass& la,
                              const CoinvClass& mu);
bool leq(const CoinvariantLattice& L, const CoinvClass& la, const CoinvClass& mu);

bool is_minuscule(const CoinvariantLattice& L, const CoinvClass& mu);

// Dominant representative of the finite-Weyl-orbit of a class, by descent.
CoinvClass dominantize(const CoinvariantLattice& L, const CoinvClass& c);

// The unique minuscule class below a dominant class.
CoinvClass minuscule_below(const CoinvariantLattice& L, const CoinvClass& mu);

// Support of mu - minuscule_below(mu): node indices with positive coefficient.
std::vector<int> support(const CoinvariantLattice& L, const CoinvClass& mu);

// Quasi-minuscule class of one connected component of the echelonnage system
// (the minimal nonzero dominant element of its coroot lattice).
CoinvClass quasi_minuscule(const CoinvariantLattice& L, int component);

// Sum of the component quasi-minuscules over all components.
CoinvClass factorwise_qm(const CoinvariantLattice& L);

// All minuscule dominant classes (torsion values included); every component
// of pi_1 contains exactly one.
std::vector<CoinvClass> minuscule_classes(const CoinvariantLattice& L);

struct DominanceCaps {
  Int height_cap = 40;  // on <2rho, mu - la>
  size_t node_cap = 200000;
};
DominanceCaps caps_from_env();

// All dominant la <= mu, as classes; BFS over positive-coroot steps.
std::vector<CoinvClass> down_set(const CoinvariantLattice& L, const CoinvClass& mu,
                                 const DominanceCaps& caps = caps_from_env());

struct CoverEdge {
  CoinvClass lower, upper;
  std::vector<int> label;  // support of upper - lower
};

// Classes covered by mu, with minimal-degeneration support labels.
std::vector<CoverEdge> covers_below(const CoinvariantLattice& L, const CoinvClass& mu,
                                    const DominanceCaps& caps = caps_from_env());

struct HasseSegment {
  std::vector<CoinvClass> nodes;          // sorted by (dimension, display)
  std::vector<std::string> node_names;    // display over fundamental coweights
  std::vector<Int> node_dims;             // <2rho, node - minuscule>
  std::vector<CoverEdge> edges;
};

// All dominant classes of one pi_1 torsion component with
// <2rho, mu - minuscule> <= cap, together with the covering edges.
HasseSegment hasse_segment(const CoinvariantLattice& L, int component, Int dim_cap,
                           const DominanceCaps& caps = caps_from_env());

std::string hasse_to_dot(const CoinvariantLattice& L, const HasseSegment& seg,
                         const std::string& title);

// Bruhat order on all of X_*(T)_I (not necessarily dominant classes) via
// chains mu_{i+1} = mu_i - k alpha^vee with 0 <= k <= <alpha, mu_i> or
// 0 <= k < -<alpha, mu_i>.
bool besson_hong_leq(const CoinvariantLattice& L, const CoinvClass& la, const CoinvClass& mu,
                     const DominanceCaps& caps = caps_from_env());

// Dimension of the Schubert variety: <2rho, mu - la>; throws NotComparable
// when la is not below mu.
Int schubert_dimension(const CoinvariantLattice& L, const CoinvClass& mu, const CoinvClass& la);

}  // namespace schubert
