#ifndef VERLINDE_PRINCIPAL_HPP
#define VERLINDE_PRINCIPAL_HPP

// Restriction along a principal SL2.  A weight x restricts to the integer
// Σ_{α>0} ⟨x, α^∨⟩ = ⟨x, 2ρ^∨⟩, so a finite-dimensional character becomes a
// symmetric Laurent polynomial in one variable, and a tilting character is a
// non-negative sum of Weyl strings Δ_m : x^m + x^{m-2} + ... + x^{-m}.

#include "verlinde/bigint.hpp"
#include "verlinde/character.hpp"
#include "verlinde/root_datum.hpp"

#include <map>

namespace verlinde {

// Symmetric Laurent polynomial with big-integer coefficients.
struct SL2Char {
    std::map<int, Int> coeff; // exponent -> coefficient; zeros are absent

    void add(int exponent, const Int& c) {
        if (c == 0) return;
        auto it = coeff.emplace(exponent, 0).first;
        it->second += c;
        if (it->second == 0) coeff.erase(it);
    }
    bool operator==(const SL2Char& other) const { return coeff == other.coeff; }
    bool is_zero() const { return coeff.empty(); }
};

SL2Char principal_restriction(const RootDatum& datum, const DominantCharacter& chi);

// Multiset of Weyl-string indices (index -> multiplicity).
using StringMultiset = std::map<int, Int>;

// Greedy top-down peel.  Throws std::invalid_argument if the character is
// not a non-negative integer combination of Weyl strings.
StringMultiset weyl_strings(const SL2Char& ch);

// Inverse of weyl_strings on valid inputs.
SL2Char string_character(const StringMultiset& strings);

// The two-variable-free convenience: full pipeline from a highest weight to
// the Weyl-string multiset of its principal restriction.
StringMultiset restriction_strings(const RootDatum& datum, const Weight& lambda);

} // namespace verlinde

#endif
