#pragma once

#include "verlinde/character.hpp"
#include "verlinde/root_datum.hpp"

#include <map>
#include <string>
#include <vector>

namespace verlinde {

// Fusion data of Ver_p(G): simples are L(lambda) for lambda in the fundamental
// alcove A = {dominant lambda : <lambda, theta_s^v> <= p - h}, and tensor
// multiplicities come from the affine-Weyl alternating sum, evaluated here by
// straightening mu + eta over the weights eta of the smaller factor.

struct StraightenResult {
    bool interior = false; // false: landed on an affine wall (contribution 0)
    Weight target;         // dominant alcove weight, valid iff interior
    int sign = 0;          // (-1)^{#reflections}, valid iff interior
};

// Dot-straighten xi: v = xi + rho is reflected into the open alcove
// 0 < <v, alpha_i^v>, <v, theta_s^v> < p.  Simple reflections are applied at
// the lowest negative coordinate first; the affine reflection at the far wall
// (v -> v + (p - c) theta_s for c = <v, theta_s^v> > p) last.
StraightenResult straighten_dot(const RootDatum& datum, const Weight& xi, long long p);

bool in_alcove(const RootDatum& datum, const Weight& lambda, long long p);
std::vector<Weight> alcove(const RootDatum& datum, long long p);

using AlcoveDecomposition = std::map<Weight, Int>;

// [L(lambda) (x) L(mu)] = sum M^nu L(nu); all buckets, each non-negative.
AlcoveDecomposition tensor_decompose(const RootDatum& datum, const Weight& lambda,
                                     const Weight& mu, long long p);
Int tensor_multiplicity(const RootDatum& datum, const Weight& lambda, const Weight& mu,
                        const Weight& nu, long long p);

// Highest weight of L(lambda)^* = L(-w_0 lambda).
Weight dual_weight(const RootDatum& datum, const Weight& lambda);

// Brute-force invertibles: mu in A with M^mu_{theta_l, mu} = 0.  At p = h+1
// the adjoint simple vanishes and every alcove weight qualifies.
std::vector<Weight> invertible_weights(const RootDatum& datum, long long p);

// {(p-h) w : w minuscule (including 0)}, sorted.
std::vector<Weight> expected_invertible_weights(const RootDatum& datum, long long p);

// sigma = t_{p w} (s_{word[0]} s_{word[1]} ... ): an extended-affine-Weyl
// element expected to preserve the alcove, with sigma.0 = (p-h) w.  The
// reflection word acts first (rightmost letter innermost).
struct AlcoveSymmetry {
    int minuscule_index; // 1-based fundamental-weight index of w
    std::vector<int> word;
};

// The alcove symmetries attached to the non-zero minuscule weights of this
// type (empty for E8, F4, G2).
std::vector<AlcoveSymmetry> alcove_symmetries(const RootDatum& datum);

// sigma.lambda  =  p*w + u(lambda + rho) - rho  for u the word's product.
Weight apply_alcove_symmetry(const RootDatum& datum, const AlcoveSymmetry& sigma,
                             const Weight& lambda, long long p);

struct SymmetryReport {
    bool permutes_alcove = false; // sigma.A = A bijectively
    bool fixes_origin_image = false; // sigma.0 = (p-h) w
    Weight origin_image;
};

SymmetryReport verify_minuscule_symmetry(const RootDatum& datum, const AlcoveSymmetry& sigma,
                                         long long p);

// Representative of the orbit of `start` under the alcove symmetries that
// lies in the root lattice (the highest weight generating Ver_p(G/Z)).
Weight root_lattice_orbit_representative(const RootDatum& datum, const Weight& start,
                                         long long p);

} // namespace verlinde
