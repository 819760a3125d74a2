#include "verlinde/principal.hpp"

#include <stdexcept>

namespace verlinde {

SL2Char principal_restriction(const RootDatum& datum, const DominantCharacter& chi) {
    SL2Char out;
    const std::vector<int>& two_rho_check = datum.positive_coroot_sum();
    for (const auto& [mu, m] : chi.mult) {
        for (const Weight& w : datum.weyl_orbit(mu)) {
            const long long e = datum.pair(w, two_rho_check);
            out.add(static_cast<int>(e), m);
        }
    }
    return out;
}

StringMultiset weyl_strings(const SL2Char& ch) {
    std::map<int, Int> work = ch.coeff;
    StringMultiset strings;
    while (!work.empty()) {
        const auto top = std::prev(work.end());
        const int m = top->first;
        const Int count = top->second;
        if (m < 0 || count < 0)
            throw std::invalid_argument("character is not a non-negative sum of Weyl strings");
        strings[m] += count;
        for (int e = m; e >= -m; e -= 2) {
            auto it = work.emplace(e, 0).first;
            it->second -= count;
            if (it->second == 0)
                work.erase(it);
            else if (it->second < 0)
                throw std::invalid_argument("character is not a non-negative sum of Weyl strings");
        }
    }
    return strings;
}

SL2Char string_character(const StringMultiset& strings) {
    SL2Char ch;
    for (const auto& [m, count] : strings) {
        if (m < 0 || count < 0) throw std::invalid_argument("invalid Weyl-string multiset");
        for (int e = m; e >= -m; e -= 2) ch.add(e, count);
    }
    return ch;
}

StringMultiset restriction_strings(const RootDatum& datum, const Weight& lambda) {
    return weyl_strings(principal_restriction(datum, dominant_character(datum, lambda)));
}

} // namespace verlinde
