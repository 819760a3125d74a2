#ifndef VERLINDE_BIGINT_HPP
#define VERLINDE_BIGINT_HPP

// Exact arbitrary-precision arithmetic used throughout the library.
// All representation-theoretic quantities (weight multiplicities, binomial
// sums, falling factorials, ...) are computed exactly and only reduced
// modulo a prime at the very end of a computation.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace verlinde {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Factorials and binomial coefficients come up in nearly every module; a
// shared table keeps them cheap.  Tables grow on demand and are intended for
// single-threaded setup or read-mostly use after warm-up.
class FactorialTable {
public:
    const Int& factorial(std::int64_t n) {
        if (n < 0) throw std::invalid_argument("factorial of negative integer");
        while (static_cast<std::int64_t>(fact_.size()) <= n) {
            fact_.push_back(fact_.back() * static_cast<std::int64_t>(fact_.size()));
        }
        return fact_[static_cast<std::size_t>(n)];
    }

private:
    std::vector<Int> fact_{1};
};

// C(n, k) for n >= 0; returns 0 outside the triangle.
Int binomial(std::int64_t n, std::int64_t k);

// Falling factorial (a)_b = a (a-1) ... (a-b+1) with (a)_0 = 1.
// Defined for arbitrary integer a and b >= 0.
Int falling_factorial(std::int64_t a, std::int64_t b);

// n!, served from a shared thread-safe table.
Int factorial(std::int64_t n);

// C(n, k) with an arbitrary-precision (possibly huge) top argument.
Int binomial_big(const Int& n, std::int64_t k);

// Canonical representative in [0, p) of an exact integer.
std::int64_t mod_p(const Int& v, std::int64_t p);

// Reduce an exact rational mod p.  Requires the denominator to be coprime
// to p; throws std::domain_error otherwise (callers that can tolerate this
// use rat_mod_p_checked below).
std::int64_t rat_mod_p(const Rat& q, std::int64_t p);

// Like rat_mod_p but reports a p-divisible denominator through `ok`.
std::int64_t rat_mod_p_checked(const Rat& q, std::int64_t p, bool& ok);

// Modular inverse of a mod p (p prime, a not divisible by p).
std::int64_t inverse_mod_p(std::int64_t a, std::int64_t p);

bool is_prime(std::int64_t n);

} // namespace verlinde

#endif
