#pragma once

#include "verlinde/bigint.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace verlinde {

// Support of the Lie bracket on sl(L_{n-1}) = L_2 + L_4 + ... + L_{2n-2} in
// Ver_p.  Components are indexed by (i,j,k) meaning L_{2i} (x) L_{2j} -> L_{2k},
// with 1 <= i,j,k <= n-1.

// The alternating binomial sum deciding condition (3); exact big integer.
Int bracket_sum(long long n, long long i, long long j, long long k);

// bracket_sum reduced mod p.  Throws if the summation range is empty
// (fusion condition violated).
long long s_value(long long n, long long i, long long j, long long k, long long p);

// |i-j| <= k <= i+j and i+j+k <= p-2, i.e. L_{2k} is a summand of L_{2i}(x)L_{2j}.
bool fusion_allows(long long i, long long j, long long k, long long p);

// Fusion + parity (i+j+k odd) + s_value != 0.
bool bracket_nonzero(long long n, long long i, long long j, long long k, long long p);

using Mask = std::uint64_t; // bit u set <=> index u in {1,...,n-1} is a member

Mask mask_from_indices(const std::vector<int>& indices);
std::vector<int> mask_indices(Mask m);
std::string mask_to_string(Mask m);

class SubalgebraContext {
public:
    // Instances with n > p/2 are reduced to p-n (sl(L_{n-1}) ~ sl(L_{p-n-1}));
    // throws std::invalid_argument if the reduced n is still out of range.
    SubalgebraContext(int n, long long p);

    int n() const { return n_; }
    int requested_n() const { return requested_n_; }
    long long p() const { return p_; }

    Mask full_mask() const;
    bool is_closed(Mask members) const;
    Mask closure(Mask members) const;

    // Sorted triples i <= j <= k with non-zero bracket component.
    std::vector<std::array<int, 3>> sorted_triples() const;

    // All bracket-closed subsets containing index 1, via the closure-union
    // lattice; sorted ascending as bitmasks.
    std::vector<Mask> enumerate() const;

    // Independent exhaustive scan over all 2^(n-2) subsets containing 1;
    // only feasible for n <= 16.
    std::vector<Mask> enumerate_exhaustive() const;

private:
    int n_;
    int requested_n_;
    long long p_;
    // forced_[i][j] = mask of all k forced into a subalgebra containing i and j
    std::vector<std::vector<Mask>> forced_;
};

// Pattern-match a closed mask against the classification families:
//   a: all of {1,...,n-1}        b: {1,3,5,...} (more than one element)
//   c: {1}                       d: {1,5} at n=7
//   e: {1,n-1} at p=2n+1         f: {1,7} at (n,p)=(10,23)
// Coinciding descriptions yield multiple labels.  Empty result = unclassified.
std::vector<char> classify_mask(Mask members, int n, long long p);

// The masks the classification predicts for (n,p), deduplicated and sorted.
std::vector<Mask> expected_family_masks(int n, long long p);

// P(n,i,j,k): normalized bracket polynomial, exact rational.  Requires
// k-(i-j) odd and the implicit falling factorials non-vanishing.
Rat p_poly(long long n, long long i, long long j, long long k);

struct IdentityCheck {
    std::string name;
    bool passed = false;
    int samples = 0;
    std::string detail; // first failing point, if any
};

// Deterministic grid verification of the closed forms for P and the
// Q-combination identities (grids exceed the total degree of each side).
std::vector<IdentityCheck> verify_p_identities();

// Independent evaluation of bracket_sum via the Racah single-sum form of the
// 6j-symbol (triangle prefactors cancel against the normalization, leaving a
// rational number).  Returns agreement of the two zero-sets mod p, or nullopt
// when p divides the denominator of the rational value (inconclusive).
std::optional<bool> six_j_agrees(long long n, long long i, long long j, long long k,
                                 long long p);

} // namespace verlinde
