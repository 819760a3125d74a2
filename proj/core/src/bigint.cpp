#include "verlinde/bigint.hpp"

#include <mutex>

namespace verlinde {

namespace {

// Pascal triangle rows, grown on demand.  Guarded by a mutex so that the
// parallel sweeps can share it; lookups after warm-up take the lock only
// briefly.
std::vector<std::vector<Int>> g_pascal; // g_pascal[n][k] = C(n,k)
std::mutex g_pascal_mutex;

} // namespace

Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    std::lock_guard<std::mutex> lock(g_pascal_mutex);
    while (static_cast<std::int64_t>(g_pascal.size()) <= n) {
        const std::size_t m = g_pascal.size();
        std::vector<Int> row(m + 1, Int(1));
        for (std::size_t j = 1; j < m; ++j)
            row[j] = g_pascal[m - 1][j - 1] + g_pascal[m - 1][j];
        g_pascal.push_back(std::move(row));
    }
    return g_pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Int falling_factorial(std::int64_t a, std::int64_t b) {
    if (b < 0) throw std::invalid_argument("falling factorial with negative length");
    Int out = 1;
    for (std::int64_t s = 0; s < b; ++s) out *= Int(a - s);
    return out;
}

Int factorial(std::int64_t n) {
    static FactorialTable table;
    static std::mutex table_mutex;
    std::lock_guard<std::mutex> lock(table_mutex);
    return table.factorial(n);
}

Int binomial_big(const Int& n, std::int64_t k) {
    if (k < 0) return Int(0);
    if (n >= 0 && n < k) return Int(0);
    Int num = 1;
    Int fact = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        num *= n - i;
        fact *= i + 1;
    }
    if (num % fact != 0) throw std::logic_error("binomial_big division not exact");
    return num / fact;
}

std::int64_t mod_p(const Int& v, std::int64_t p) {
    if (p <= 0) throw std::invalid_argument("modulus must be positive");
    Int r = v % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
}

std::int64_t inverse_mod_p(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("no inverse of 0 mod p");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("arguments not coprime in inverse_mod_p");
    if (t < 0) t += p;
    return t;
}

std::int64_t rat_mod_p_checked(const Rat& q, std::int64_t p, bool& ok) {
    const Int den = rat_den(q);
    if (den % p == 0) {
        ok = false;
        return 0;
    }
    ok = true;
    const std::int64_t num_mod = mod_p(rat_num(q), p);
    const std::int64_t den_mod = mod_p(den, p);
    return (num_mod * inverse_mod_p(den_mod, p)) % p;
}

std::int64_t rat_mod_p(const Rat& q, std::int64_t p) {
    bool ok = true;
    const std::int64_t v = rat_mod_p_checked(q, p, ok);
    if (!ok) throw std::domain_error("denominator divisible by p in rat_mod_p");
    return v;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace verlinde
