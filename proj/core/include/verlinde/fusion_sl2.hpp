#ifndef VERLINDE_FUSION_SL2_HPP
#define VERLINDE_FUSION_SL2_HPP

// Objects and operations of the Verlinde category Ver_p of SL2: images of
// tilting characters under semisimplification, the fusion product of the
// simples L_0 .. L_{p-2}, symmetric/exterior powers computed on lifts, and
// the (m, n, N) invariants carved out of them.

#include "verlinde/bigint.hpp"
#include "verlinde/principal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace verlinde {

struct VerpObject {
    long long p = 0;
    std::vector<Int> mult; // mult[c] = multiplicity of L_c, c = 0..p-2

    VerpObject() = default;
    explicit VerpObject(long long prime)
        : p(prime), mult(static_cast<std::size_t>(prime - 1), 0) {}
    static VerpObject simple(long long prime, int c);
    static VerpObject unit(long long prime) { return simple(prime, 0); }

    bool is_zero() const;
    bool operator==(const VerpObject& o) const { return p == o.p && mult == o.mult; }
    std::string to_string() const; // e.g. "L0 + 2*L4", "0"
};

// Semisimplified image of a tilting character given by its Weyl-string
// multiset: strings Δ_{ap-1} die, and Δ_{ap+b-1} forces a partner Δ_{ap-b-1}
// (1 <= b <= p-1) with which it cancels.  Throws std::invalid_argument if the
// forced pairing fails (the multiset was not a tilting character).
VerpObject verp_image(const StringMultiset& strings, long long p);

// Independent route via evaluation at a p-th root of unity.
VerpObject verp_image_cyclotomic(const SL2Char& ch, long long p);

// L_a ⊗ L_b = ⊕ L_c over c ≡ a+b (2), |a-b| <= c <= min(a+b, 2p-4-a-b).
VerpObject fuse(int a, int b, long long p);

VerpObject tensor(const VerpObject& x, const VerpObject& y);

// Sym^d / Λ^d via complete homogeneous resp. elementary symmetric functions
// of the lifted weight multiset.  Valid for 1 <= d <= p-1; d >= p is
// rejected (the lift argument needs d < p).
VerpObject sym_power(const VerpObject& x, int d);
VerpObject ext_power(const VerpObject& x, int d);

// Σ mult[c]·(c+1) mod p; a ring homomorphism to F_p.
long long dim_mod_p(const VerpObject& x);

// Integer lift Σ mult[c]·(c+1) (no reduction).
Int dim_lift(const VerpObject& x);

// The invertible objects of Ver_p are L_0 (dim ≡ 1) and L_{p-2} (dim ≡ -1).
bool is_invertible(const VerpObject& x);

enum class TopParity { even, odd, not_invertible };

struct InvariantsProfile {
    // m: largest d < p with Sym^d X ≠ 0, when that is visible below degree p.
    std::optional<int> sym_top;
    // n: same for Λ.
    std::optional<int> ext_top;
    // N = m + n when both are determined.
    std::optional<int> order;
    TopParity top_ext_parity = TopParity::not_invertible;
};

// X must be non-zero.  Fields are std::nullopt when the top is not reached
// within degree p-1 ("undetermined >= p-1").
InvariantsProfile invariants_profile(const VerpObject& x);

// Image of the half-spin module of D_r in Ver_{2r+1} (r >= 3, 2r+1 prime);
// returns the single surviving index.
int halfspin_image(int r);

// Expected dimensions mod p of Sym^d X and Λ^d X for d < p, from the
// dimension of X alone: C(dim X + d - 1, d) and C(dim X, d).
long long expected_sym_dim_mod_p(const Int& dim_x, int d, long long p);
long long expected_ext_dim_mod_p(const Int& dim_x, int d, long long p);

} // namespace verlinde

#endif
