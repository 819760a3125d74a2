#ifndef VERLINDE_CYCLOTOMIC_HPP
#define VERLINDE_CYCLOTOMIC_HPP

// Exact arithmetic in Z[ω], ω a primitive p-th root of unity, used as an
// independent route to the semisimplification: a tilting character T
// determines the multiplicities [T̄ : L_c] through
//     (ω - ω^{-1}) ch_T(ω) = Σ_c [T̄ : L_c] (ω^{c+1} - ω^{-c-1}),
// solved per parity class of the exponents.

#include "verlinde/bigint.hpp"
#include "verlinde/principal.hpp"

#include <vector>

namespace verlinde {

class CyclotomicInt {
public:
    // zero element of Z[ω] for a prime p
    explicit CyclotomicInt(long long p) : p_(p), c_(static_cast<std::size_t>(p), 0) {}

    static CyclotomicInt omega_power(long long p, long long e);
    static CyclotomicInt from_char(const SL2Char& ch, long long p);

    long long modulus() const { return p_; }

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator-=(const CyclotomicInt& o);
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    bool is_zero() const;
    bool operator==(const CyclotomicInt& o) const;

    // Coefficients on 1, ω, ..., ω^{p-2} with the ω^{p-1} coordinate
    // eliminated through 1 + ω + ... + ω^{p-1} = 0.
    std::vector<Int> canonical() const;

    void add_term(long long exponent, const Int& coefficient);

private:
    long long p_;
    std::vector<Int> c_; // internal: coefficients on ω^0..ω^{p-1}, not canonical
};

// Multiplicities [T̄ : L_c] (c = 0..p-2) recovered from the character alone.
// Throws std::invalid_argument when ch is not a tilting character.
std::vector<Int> cyclotomic_multiplicities(const SL2Char& ch, long long p);

} // namespace verlinde

#endif
