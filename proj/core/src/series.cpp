#include "verlinde/series.hpp"

#include "verlinde/bigint.hpp"

#include <stdexcept>

namespace verlinde {

void ModPSeries::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string ModPSeries::to_string() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] == 0) continue;
        if (!out.empty()) out += " + ";
        if (coeffs[d] != 1 || d == 0) out += std::to_string(coeffs[d]);
        if (d == 1) out += "t";
        if (d > 1) out += "t^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

ModPSeries binomial_series(std::int64_t e, int sign, std::int64_t p) {
    if (e < 0 || p < 2) throw std::invalid_argument("binomial_series: bad arguments");
    ModPSeries s{p, {1}};
    const std::int64_t t1 = sign > 0 ? 1 : p - 1; // +/- t mod p
    for (std::int64_t step = 0; step < e; ++step) {
        std::vector<std::int64_t> next(s.coeffs.size() + 1, 0);
        for (std::size_t d = 0; d < s.coeffs.size(); ++d) {
            next[d] = (next[d] + s.coeffs[d]) % p;
            next[d + 1] = (next[d + 1] + s.coeffs[d] * t1) % p;
        }
        s.coeffs = std::move(next);
        s.trim();
    }
    return s;
}

PowerSeriesTriple power_series(std::int64_t m, std::int64_t n, std::int64_t p) {
    if (m < 0 || n < 0) throw std::invalid_argument("power_series: negative exponent");
    return {binomial_series(m, -1, p), binomial_series(n, +1, p),
            binomial_series(m + n, +1, p)};
}

bool divisibility_check(std::int64_t m, std::int64_t n, std::int64_t p, std::int64_t r) {
    if (r < 0) throw std::invalid_argument("divisibility_check: negative r");
    const ModPSeries prod = binomial_series(m + n, +1, p);
    std::int64_t bound = 1;
    for (std::int64_t i = 0; i < r; ++i) bound *= p;
    for (std::int64_t d = 1; d <= bound; ++d)
        if (prod.coefficient(static_cast<std::size_t>(d)) != 0) return false;
    return true;
}

bool arithmetic_divisibility(std::int64_t m, std::int64_t n, std::int64_t p, std::int64_t r) {
    std::int64_t q = p;
    for (std::int64_t i = 0; i < r; ++i) q *= p;
    return (m + n) % q == 0;
}

std::int64_t binomial_mod_p_lucas(std::int64_t n, std::int64_t k, std::int64_t p) {
    if (k < 0 || k > n) return 0;
    std::int64_t out = 1;
    while (n > 0 || k > 0) {
        const std::int64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        out = out * mod_p(binomial_big(nd, kd), p) % p;
        n /= p;
        k /= p;
    }
    return out;
}

const std::vector<DimensionProfile>& dimension_profiles() {
    // First vanishing Sym / Lambda powers of simples in Ver_4, Ver_8, Ver_9,
    // measured in the categories themselves; m + n is a multiple of p^2 in
    // every observed case.
    static const std::vector<DimensionProfile> table = {
        {"Ver_4", "L_1", 2, 2, 2},  {"Ver_8", "L_1", 2, 6, 2},
        {"Ver_8", "L_3", 2, 4, 4},  {"Ver_9", "L_1", 3, 7, 2},
        {"Ver_9", "L_2", 3, 6, 3},  {"Ver_9", "L_4", 3, 2, 7},
        {"Ver_9", "L_5", 3, 3, 6},  {"Ver_9", "E_1*", 3, 4, 5},
    };
    return table;
}

} // namespace verlinde
