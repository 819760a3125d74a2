#include "verlinde/cyclotomic.hpp"

#include <stdexcept>

namespace verlinde {

namespace {
std::size_t reduce_exponent(long long e, long long p) {
    long long r = e % p;
    if (r < 0) r += p;
    return static_cast<std::size_t>(r);
}
} // namespace

void CyclotomicInt::add_term(long long exponent, const Int& coefficient) {
    c_[reduce_exponent(exponent, p_)] += coefficient;
}

CyclotomicInt CyclotomicInt::omega_power(long long p, long long e) {
    CyclotomicInt out(p);
    out.add_term(e, 1);
    return out;
}

CyclotomicInt CyclotomicInt::from_char(const SL2Char& ch, long long p) {
    CyclotomicInt out(p);
    for (const auto& [e, c] : ch.coeff) out.add_term(e, c);
    return out;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    CyclotomicInt out(p_);
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (c_[a] == 0) continue;
        for (std::size_t b = 0; b < c_.size(); ++b) {
            if (o.c_[b] == 0) continue;
            out.c_[(a + b) % static_cast<std::size_t>(p_)] += c_[a] * o.c_[b];
        }
    }
    return out;
}

std::vector<Int> CyclotomicInt::canonical() const {
    // Subtracting a constant from every ω^k coordinate is the zero element,
    // so normalise the ω^{p-1} coordinate away.
    const Int& t = c_.back();
    std::vector<Int> out(c_.size() - 1);
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) out[k] = c_[k] - t;
    return out;
}

bool CyclotomicInt::is_zero() const {
    const Int& t = c_.front();
    for (const Int& v : c_)
        if (v != t) return false;
    return true;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
    CyclotomicInt diff = *this;
    diff -= o;
    return diff.is_zero();
}

std::vector<Int> cyclotomic_multiplicities(const SL2Char& ch, long long p) {
    std::vector<Int> mult(static_cast<std::size_t>(p - 1), 0);
    // The weights of an indecomposable tilting share one parity, so the two
    // parity slices of ch are tilting characters themselves and each system
    //     ĝ_k = n_{k-1} - n_{p-k-1}
    // has unknowns on one side of the pairing only.
    for (int parity = 0; parity <= 1; ++parity) {
        std::vector<Int> g(static_cast<std::size_t>(p), 0);
        bool any = false;
        for (const auto& [e, c] : ch.coeff) {
            if (((e % 2) + 2) % 2 != parity) continue;
            any = true;
            g[reduce_exponent(e + 1, p)] += c;
            g[reduce_exponent(e - 1, p)] -= c;
        }
        if (!any) continue;
        const Int base = g[0];
        for (Int& v : g) v -= base;
        for (long long c = parity; c <= p - 2; c += 2) {
            if (g[static_cast<std::size_t>(c + 1)] < 0)
                throw std::invalid_argument("cyclotomic solve: negative multiplicity");
            mult[static_cast<std::size_t>(c)] = g[static_cast<std::size_t>(c + 1)];
        }
        // Consistency: the candidate must reproduce the whole vector.
        std::vector<Int> probe(static_cast<std::size_t>(p), 0);
        for (long long c = parity; c <= p - 2; c += 2) {
            probe[static_cast<std::size_t>(c + 1)] += mult[static_cast<std::size_t>(c)];
            probe[static_cast<std::size_t>(p - c - 1)] -= mult[static_cast<std::size_t>(c)];
        }
        if (probe != g)
            throw std::invalid_argument("cyclotomic solve: character is not a tilting character");
    }
    return mult;
}

} // namespace verlinde
