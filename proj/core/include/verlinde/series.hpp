#ifndef VERLINDE_SERIES_HPP
#define VERLINDE_SERIES_HPP

// Mod-p generating functions for symmetric/exterior power dimensions.  An
// object whose symmetric powers stop at degree m and exterior powers at
// degree n contributes (1-t)^m and (1+t)^n; the product (1+t)^{m+n} controls
// how far the combined dimension count p^N = m + n is forced up the p-adic
// ladder.

#include <cstdint>
#include <string>
#include <vector>

namespace verlinde {

struct ModPSeries {
    std::int64_t p = 2;
    std::vector<std::int64_t> coeffs; // coeffs[d] in [0, p), no trailing zeros

    std::int64_t coefficient(std::size_t d) const {
        return d < coeffs.size() ? coeffs[d] : 0;
    }
    void trim();
    std::string to_string() const; // "1 + 2t + t^3" style, for witnesses
};

// (1 +/- t)^e by repeated multiplication mod p.
ModPSeries binomial_series(std::int64_t e, int sign, std::int64_t p);

struct PowerSeriesTriple {
    ModPSeries sym;     // (1 - t)^m
    ModPSeries ext;     // (1 + t)^n
    ModPSeries product; // (1 + t)^{m+n}
};

PowerSeriesTriple power_series(std::int64_t m, std::int64_t n, std::int64_t p);

// Coefficient test: t^d vanishes in (1+t)^{m+n} mod p for all 0 < d <= p^r.
bool divisibility_check(std::int64_t m, std::int64_t n, std::int64_t p, std::int64_t r);

// The arithmetic form of the same statement: p^{r+1} | (m+n).
bool arithmetic_divisibility(std::int64_t m, std::int64_t n, std::int64_t p, std::int64_t r);

// C(n, k) mod p digit by digit (Lucas); second path for the coefficient test.
std::int64_t binomial_mod_p_lucas(std::int64_t n, std::int64_t k, std::int64_t p);

// Measured (m, n) profiles of simples in the small non-semisimple Verlinde
// categories Ver_{p^k}; read-only reference data, not recomputed here.
struct DimensionProfile {
    std::string category; // "Ver_4", "Ver_8", "Ver_9"
    std::string object;   // "L_1", ..., "E_1*"
    std::int64_t p;
    std::int64_t m; // Sym^{m+1} is the first vanishing symmetric power
    std::int64_t n; // Lambda^{n+1} is the first vanishing exterior power
};

const std::vector<DimensionProfile>& dimension_profiles();

} // namespace verlinde

#endif
