#include "verlinde/fusion_sl2.hpp"

#include "verlinde/character.hpp"
#include "verlinde/cyclotomic.hpp"
#include "verlinde/root_datum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace verlinde {

namespace {

void check_prime_p(long long p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("p must be a prime");
}

} // namespace

VerpObject VerpObject::simple(long long prime, int c) {
    VerpObject x(prime);
    if (c < 0 || c > prime - 2) throw std::invalid_argument("simple index out of range");
    x.mult[static_cast<std::size_t>(c)] = 1;
    return x;
}

bool VerpObject::is_zero() const {
    return std::all_of(mult.begin(), mult.end(), [](const Int& m) { return m == 0; });
}

std::string VerpObject::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t c = 0; c < mult.size(); ++c) {
        if (mult[c] == 0) continue;
        if (!first) out << " + ";
        if (mult[c] != 1) out << mult[c].str() << "*";
        out << "L" << c;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

VerpObject verp_image(const StringMultiset& strings, long long p) {
    check_prime_p(p);
    StringMultiset work = strings;
    VerpObject out(p);
    while (!work.empty()) {
        const auto top = std::prev(work.end());
        const int m = top->first;
        const Int count = top->second;
        if (m < 0 || count < 0) throw std::invalid_argument("invalid Weyl-string multiset");
        work.erase(top);
        if (count == 0) continue;
        if (m <= p - 2) {
            out.mult[static_cast<std::size_t>(m)] += count;
            continue;
        }
        const long long b = (m + 1) % p;
        if (b == 0) continue; // Δ_{ap-1}: dies
        const int partner = m - static_cast<int>(2 * b);
        auto it = work.find(partner);
        if (it == work.end() || it->second < count)
            throw std::invalid_argument("string pairing failed: not a tilting character");
        it->second -= count;
        if (it->second == 0) work.erase(it);
    }
    return out;
}

VerpObject verp_image_cyclotomic(const SL2Char& ch, long long p) {
    check_prime_p(p);
    VerpObject out(p);
    out.mult = cyclotomic_multiplicities(ch, p);
    return out;
}

VerpObject fuse(int a, int b, long long p) {
    check_prime_p(p);
    if (a < 0 || b < 0 || a > p - 2 || b > p - 2)
        throw std::invalid_argument("fuse: indices must lie in [0, p-2]");
    VerpObject out(p);
    const int hi = static_cast<int>(std::min<long long>(a + b, 2 * p - 4 - a - b));
    for (int c = std::abs(a - b); c <= hi; c += 2)
        out.mult[static_cast<std::size_t>(c)] = 1;
    return out;
}

VerpObject tensor(const VerpObject& x, const VerpObject& y) {
    if (x.p != y.p) throw std::invalid_argument("tensor: mismatched primes");
    VerpObject out(x.p);
    for (int a = 0; a <= x.p - 2; ++a) {
        if (x.mult[static_cast<std::size_t>(a)] == 0) continue;
        for (int b = 0; b <= y.p - 2; ++b) {
            if (y.mult[static_cast<std::size_t>(b)] == 0) continue;
            const Int m = x.mult[static_cast<std::size_t>(a)] * y.mult[static_cast<std::size_t>(b)];
            const VerpObject f = fuse(a, b, x.p);
            for (std::size_t c = 0; c < out.mult.size(); ++c) out.mult[c] += m * f.mult[c];
        }
    }
    return out;
}

namespace {

// The lift of X = ⊕ n_c L_c is the tilting module ⊕ n_c T_c whose weight
// multiset is n_c copies of each of c, c-2, ..., -c.  Sym^d and Λ^d of the
// lift have the complete homogeneous resp. elementary symmetric functions of
// that multiset as characters.
std::vector<std::pair<int, Int>> lifted_weight_multiset(const VerpObject& x) {
    std::map<int, Int> items;
    for (int c = 0; c <= x.p - 2; ++c) {
        const Int& n = x.mult[static_cast<std::size_t>(c)];
        if (n == 0) continue;
        for (int w = c; w >= -c; w -= 2) items[w] += n;
    }
    return std::vector<std::pair<int, Int>>(items.begin(), items.end());
}

SL2Char symmetric_function_char(const VerpObject& x, int d, bool elementary) {
    // polynomial in t of degree <= d, coefficients are Laurent polynomials
    std::vector<SL2Char> poly(static_cast<std::size_t>(d) + 1);
    poly[0].add(0, 1);
    for (const auto& [w, count] : lifted_weight_multiset(x)) {
        std::vector<SL2Char> next(poly.size());
        for (int j = 0; j <= d; ++j) {
            for (int u = 0; u <= j; ++u) {
                // u factors drawn from this weight: multiplicity C(count, u)
                // for Λ, C(count + u - 1, u) for Sym.
                const Int ways = elementary ? binomial_big(count, u)
                                            : binomial_big(count + u - 1, u);
                if (ways == 0) continue;
                for (const auto& [e, c] : poly[static_cast<std::size_t>(j - u)].coeff)
                    next[static_cast<std::size_t>(j)].add(e + u * w, c * ways);
            }
        }
        poly = std::move(next);
    }
    return poly[static_cast<std::size_t>(d)];
}

VerpObject power_object(const VerpObject& x, int d, bool elementary) {
    if (d < 1 || d > x.p - 1)
        throw std::invalid_argument("power degree must satisfy 1 <= d <= p-1");
    const SL2Char ch = symmetric_function_char(x, d, elementary);
    return verp_image(weyl_strings(ch), x.p);
}

} // namespace

VerpObject sym_power(const VerpObject& x, int d) { return power_object(x, d, false); }
VerpObject ext_power(const VerpObject& x, int d) { return power_object(x, d, true); }

long long dim_mod_p(const VerpObject& x) { return mod_p(dim_lift(x), x.p); }

Int dim_lift(const VerpObject& x) {
    Int total = 0;
    for (std::size_t c = 0; c < x.mult.size(); ++c) total += x.mult[c] * (c + 1);
    return total;
}

bool is_invertible(const VerpObject& x) {
    Int total = 0;
    for (const Int& m : x.mult) total += m;
    if (total != 1) return false;
    return x.mult.front() == 1 || x.mult.back() == 1;
}

InvariantsProfile invariants_profile(const VerpObject& x) {
    if (x.is_zero()) throw std::invalid_argument("invariants_profile wants a non-zero object");
    InvariantsProfile profile;

    VerpObject top_ext(x.p);
    int last_nonzero_sym = 0, last_nonzero_ext = 0;
    bool sym_vanished = false, ext_vanished = false;
    for (int d = 1; d <= x.p - 1 && !sym_vanished; ++d) {
        if (sym_power(x, d).is_zero())
            sym_vanished = true;
        else
            last_nonzero_sym = d;
    }
    for (int d = 1; d <= x.p - 1 && !ext_vanished; ++d) {
        const VerpObject e = ext_power(x, d);
        if (e.is_zero()) {
            ext_vanished = true;
        } else {
            last_nonzero_ext = d;
            top_ext = e;
        }
    }
    if (sym_vanished) profile.sym_top = last_nonzero_sym;
    if (ext_vanished) profile.ext_top = last_nonzero_ext;
    if (profile.sym_top && profile.ext_top) profile.order = *profile.sym_top + *profile.ext_top;

    if (profile.ext_top && is_invertible(top_ext))
        profile.top_ext_parity = dim_mod_p(top_ext) == 1 ? TopParity::even : TopParity::odd;
    else
        profile.top_ext_parity = TopParity::not_invertible;
    return profile;
}

int halfspin_image(int r) {
    const long long p = 2LL * r + 1;
    if (r < 3 || !is_prime(p))
        throw std::invalid_argument("halfspin_image needs r >= 3 with 2r+1 prime");
    const RootDatum datum = RootDatum::build('D', r);
    const VerpObject image = verp_image(restriction_strings(datum, datum.fundamental_weight(r)), p);
    int survivor = -1;
    for (int c = 0; c <= p - 2; ++c) {
        if (image.mult[static_cast<std::size_t>(c)] == 0) continue;
        if (survivor != -1 || image.mult[static_cast<std::size_t>(c)] != 1)
            throw std::logic_error("half-spin image is not a single simple");
        survivor = c;
    }
    if (survivor < 0) throw std::logic_error("half-spin image vanished");
    return survivor;
}

long long expected_sym_dim_mod_p(const Int& dim_x, int d, long long p) {
    return mod_p(binomial_big(dim_x + d - 1, d), p);
}

long long expected_ext_dim_mod_p(const Int& dim_x, int d, long long p) {
    return mod_p(binomial_big(dim_x, d), p);
}

} // namespace verlinde
