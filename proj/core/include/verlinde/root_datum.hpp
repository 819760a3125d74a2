#ifndef VERLINDE_ROOT_DATUM_HPP
#define VERLINDE_ROOT_DATUM_HPP

// Integral root data for the simple types A..G in Bourbaki numbering.
//
// Weights are always stored as integer coordinate vectors in the basis of
// fundamental weights, so ⟨λ, α_i^∨⟩ is simply λ[i].  Roots are carried in
// three coordinate systems at once (fundamental-weight coordinates, simple
// root coordinates, simple coroot coordinates); everything is exact integer
// arithmetic.

#include "verlinde/bigint.hpp"

#include <string>
#include <vector>

namespace verlinde {

using Weight = std::vector<int>; // fundamental-weight coordinates

struct Root {
    Weight weight;              // ⟨α, α_i^∨⟩ for i = 1..rank
    std::vector<int> on_roots;  // α = Σ c_i α_i
    std::vector<int> on_coroots;// α^∨ = Σ c'_i α_i^∨
    int half_norm = 1;          // (α,α)/2, normalised so short roots give 1
    int height = 1;             // Σ c_i
};

class RootDatum {
public:
    // Valid pairs: A r>=1, B r>=2, C r>=2, D r>=3, E r in {6,7,8}, F r=4,
    // G r=2.  (D3 is the triality relabelling of A3; it is accepted so the
    // half-spin family D_r, p = 2r+1 starts at p = 7.)  Anything else throws
    // std::invalid_argument.
    static RootDatum build(char type, int rank);

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const; // e.g. "A3", "E7"

    // Cartan matrix, cartan()[i][j] = ⟨α_j, α_i^∨⟩ (Bourbaki numbering,
    // 0-based storage).
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& highest_root() const { return positive_[highest_long_]; }       // θ_l
    const Root& highest_short_root() const { return positive_[highest_short_]; }// θ_s

    // Marks of θ_s^∨ on the simple coroots; the Coxeter number satisfies
    // h = 1 + Σ marks.
    const std::vector<int>& short_dominant_coroot() const {
        return positive_[highest_short_].on_coroots;
    }

    int coxeter_number() const { return coxeter_; }
    long long fundamental_group_order() const { return fundamental_order_; } // |X(T)/ZΦ|

    // Minuscule weights: 0 together with every ϖ_i with ⟨ϖ_i, θ_s^∨⟩ = 1.
    const std::vector<Weight>& minuscule_weights() const { return minuscule_; }

    Weight zero_weight() const { return Weight(rank_, 0); }
    Weight rho() const { return Weight(rank_, 1); }
    Weight fundamental_weight(int i) const; // 1-based index

    // ⟨λ, Σ c'_i α_i^∨⟩ = Σ c'_i λ_i for λ in fundamental-weight coordinates.
    long long pair(const Weight& lambda, const std::vector<int>& coroot) const;

    bool is_dominant(const Weight& lambda) const;

    // s_i(λ) = λ - ⟨λ, α_i^∨⟩ α_i, 1-based i.
    Weight simple_reflection(const Weight& lambda, int i) const;

    // Unique dominant element of the Weyl orbit (plain action, no ρ shift).
    Weight dominant_representative(const Weight& lambda) const;

    // Full Weyl orbit of a dominant weight, sorted lexicographically.
    std::vector<Weight> weyl_orbit(const Weight& dominant) const;

    // Dominant weights λ with ⟨λ, θ_s^∨⟩ <= p - h, sorted lexicographically.
    // These index the simple objects of the semisimplified tilting category
    // at a prime p >= h.
    std::vector<Weight> alcove_weights(long long p) const;

    bool in_root_lattice(const Weight& lambda) const;

    // Coordinates of 2ρ^∨ = Σ_{α>0} α^∨ on the simple coroots.
    const std::vector<int>& positive_coroot_sum() const { return two_rho_check_; }

    // Weyl dimension formula ∏_{α>0} ⟨λ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩, exact.
    Int weyl_dimension(const Weight& lambda) const;

    // det(A) · (x, y) for the W-invariant form with short roots of square
    // length 2; scaling by det(A) keeps everything integral.
    Int scaled_weight_form(const Weight& x, const Weight& y) const;
    const Int& cartan_determinant() const { return cartan_det_; }
    const std::vector<int>& symmetrizer() const { return symmetrizer_; }

    // Height Σ c_i of λ = Σ c_i α_i; throws if λ is not in the root lattice.
    long long root_lattice_height(const Weight& lambda) const;

private:
    RootDatum() = default;
    void generate_roots();
    void finish_tables();

    char type_ = 'A';
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> symmetrizer_; // d_i with d_i A_ij = d_j A_ji, short = 1
    std::vector<Root> positive_;
    std::size_t highest_long_ = 0;
    std::size_t highest_short_ = 0;
    int coxeter_ = 0;
    long long fundamental_order_ = 1;
    std::vector<Weight> minuscule_;
    std::vector<int> two_rho_check_;
    std::vector<std::vector<Int>> cartan_adjugate_; // adj(A), for lattice tests
    Int cartan_det_ = 1;
};

} // namespace verlinde

#endif
