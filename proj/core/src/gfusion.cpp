#include "verlinde/gfusion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace verlinde {

namespace {

void require_p_above_h(const RootDatum& datum, long long p) {
    if (p <= datum.coxeter_number())
        throw std::invalid_argument("need p > Coxeter number");
}

} // namespace

StraightenResult straighten_dot(const RootDatum& datum, const Weight& xi, long long p) {
    require_p_above_h(datum, p);
    const int rank = datum.rank();
    Weight v = xi;
    const Weight rho = datum.rho();
    for (int i = 0; i < rank; ++i) v[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];

    StraightenResult out;
    int sign = 1;
    for (long long guard = 0; guard < 1'000'000; ++guard) {
        int pending = 0; // first simple index with negative coordinate, if any
        for (int i = 1; i <= rank; ++i) {
            const int c = v[static_cast<std::size_t>(i - 1)];
            if (c == 0) return out; // wall
            if (c < 0) { pending = i; break; }
        }
        if (pending != 0) {
            v = datum.simple_reflection(v, pending);
            sign = -sign;
            continue;
        }
        const long long far = datum.pair(v, datum.short_dominant_coroot());
        if (far == p) return out; // far wall
        if (far < p) {
            for (int i = 0; i < rank; ++i)
                v[static_cast<std::size_t>(i)] -= rho[static_cast<std::size_t>(i)];
            out.interior = true;
            out.target = v;
            out.sign = sign;
            return out;
        }
        const Weight& theta_s = datum.highest_short_root().weight;
        for (int i = 0; i < rank; ++i)
            v[static_cast<std::size_t>(i)] += static_cast<int>(p - far) * theta_s[static_cast<std::size_t>(i)];
        sign = -sign;
    }
    throw std::logic_error("straighten_dot failed to terminate");
}

bool in_alcove(const RootDatum& datum, const Weight& lambda, long long p) {
    require_p_above_h(datum, p);
    return datum.is_dominant(lambda) &&
           datum.pair(lambda, datum.short_dominant_coroot()) <= p - datum.coxeter_number();
}

std::vector<Weight> alcove(const RootDatum& datum, long long p) {
    require_p_above_h(datum, p);
    return datum.alcove_weights(p);
}

AlcoveDecomposition tensor_decompose(const RootDatum& datum, const Weight& lambda,
                                     const Weight& mu, long long p) {
    if (!in_alcove(datum, lambda, p) || !in_alcove(datum, mu, p))
        throw std::invalid_argument("tensor_decompose: weights must lie in the alcove");
    // Expand the factor with the smaller Weyl dimension (fusion is commutative).
    const Weight* small = &lambda;
    const Weight* base = &mu;
    if (datum.weyl_dimension(lambda) > datum.weyl_dimension(mu)) std::swap(small, base);

    AlcoveDecomposition buckets;
    const DominantCharacter ch = dominant_character(datum, *small);
    for (const auto& [eta, mult] : expanded_weights(datum, ch)) {
        Weight shifted = *base;
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += eta[i];
        const StraightenResult s = straighten_dot(datum, shifted, p);
        if (!s.interior) continue;
        buckets[s.target] += s.sign > 0 ? mult : -mult;
    }
    for (auto it = buckets.begin(); it != buckets.end();) {
        if (it->second == 0) {
            it = buckets.erase(it);
        } else if (it->second < 0) {
            throw std::logic_error("tensor_decompose produced a negative multiplicity");
        } else {
            ++it;
        }
    }
    return buckets;
}

Int tensor_multiplicity(const RootDatum& datum, const Weight& lambda, const Weight& mu,
                        const Weight& nu, long long p) {
    if (!in_alcove(datum, nu, p))
        throw std::invalid_argument("tensor_multiplicity: nu must lie in the alcove");
    const AlcoveDecomposition buckets = tensor_decompose(datum, lambda, mu, p);
    const auto it = buckets.find(nu);
    return it == buckets.end() ? Int(0) : it->second;
}

Weight dual_weight(const RootDatum& datum, const Weight& lambda) {
    Weight v = lambda;
    for (int& c : v) c = -c;
    return datum.dominant_representative(v);
}

std::vector<Weight> invertible_weights(const RootDatum& datum, long long p) {
    require_p_above_h(datum, p);
    const long long h = datum.coxeter_number();
    std::vector<Weight> out;
    if (p == h + 1) return alcove(datum, p); // adjoint simple vanishes
    const Weight theta = datum.highest_root().weight;
    const DominantCharacter adjoint = dominant_character(datum, theta);
    const auto weights = expanded_weights(datum, adjoint);
    for (const Weight& mu : alcove(datum, p)) {
        Int self_mult = 0;
        for (const auto& [eta, mult] : weights) {
            Weight shifted = mu;
            for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += eta[i];
            const StraightenResult s = straighten_dot(datum, shifted, p);
            if (s.interior && s.target == mu) self_mult += s.sign > 0 ? mult : -mult;
        }
        if (self_mult == 0) out.push_back(mu);
    }
    return out;
}

std::vector<Weight> expected_invertible_weights(const RootDatum& datum, long long p) {
    require_p_above_h(datum, p);
    const int k = static_cast<int>(p - datum.coxeter_number());
    std::vector<Weight> out;
    for (const Weight& w : datum.minuscule_weights()) {
        Weight scaled = w;
        for (int& c : scaled) c *= k;
        out.push_back(scaled);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<int> run(int from, int to) { // inclusive ascending or descending
    std::vector<int> w;
    if (from <= to)
        for (int i = from; i <= to; ++i) w.push_back(i);
    else
        for (int i = from; i >= to; --i) w.push_back(i);
    return w;
}

void append(std::vector<int>& word, const std::vector<int>& tail) {
    word.insert(word.end(), tail.begin(), tail.end());
}

} // namespace

std::vector<AlcoveSymmetry> alcove_symmetries(const RootDatum& datum) {
    const int r = datum.rank();
    std::vector<AlcoveSymmetry> out;
    switch (datum.type()) {
    case 'A':
        for (int i = 1; i <= r; ++i) {
            AlcoveSymmetry s{i, {}};
            for (int rep = 0; rep < i; ++rep) append(s.word, run(1, r));
            out.push_back(std::move(s));
        }
        break;
    case 'B': {
        AlcoveSymmetry s{r, {}};
        for (int i = r; i >= 1; --i) append(s.word, run(i, r));
        out.push_back(std::move(s));
        break;
    }
    case 'C': {
        AlcoveSymmetry s{1, run(1, r)};
        append(s.word, run(r - 1, 1));
        out.push_back(std::move(s));
        break;
    }
    case 'D': {
        AlcoveSymmetry v{1, run(1, r - 2)};
        v.word.push_back(r);
        append(v.word, run(r - 1, 1));
        out.push_back(std::move(v));
        // spin words: alternating tails w^+_i = s_i..s_{r-2} s_r and
        // w^-_i = s_i..s_{r-2} s_{r-1}
        auto spin = [&](int lead) {
            AlcoveSymmetry s{lead, {lead}};
            bool plus = lead == r - 1;
            for (int i = r - 2; i >= 1; --i, plus = !plus) {
                append(s.word, run(i, r - 2));
                s.word.push_back(plus ? r : r - 1);
            }
            return s;
        };
        out.push_back(spin(r - 1));
        out.push_back(spin(r));
        break;
    }
    case 'E':
        if (r == 6) {
            out.push_back({1, {1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2, 1, 3, 4, 5, 6}});
            out.push_back({6, {6, 5, 4, 3, 1, 2, 4, 5, 3, 4, 2, 6, 5, 4, 3, 1}});
        } else if (r == 7) {
            out.push_back({7, {7, 6, 5, 4, 3, 1, 2, 4, 3, 5, 4, 6, 7, 2,
                               5, 6, 4, 5, 3, 4, 2, 1, 3, 4, 5, 6, 7}});
        }
        break;
    default: // E8, F4, G2: no non-zero minuscule weights
        break;
    }
    return out;
}

Weight apply_alcove_symmetry(const RootDatum& datum, const AlcoveSymmetry& sigma,
                             const Weight& lambda, long long p) {
    const int rank = datum.rank();
    const Weight rho = datum.rho();
    Weight v = lambda;
    for (int i = 0; i < rank; ++i) v[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];
    for (auto it = sigma.word.rbegin(); it != sigma.word.rend(); ++it)
        v = datum.simple_reflection(v, *it);
    const Weight w = datum.fundamental_weight(sigma.minuscule_index);
    for (int i = 0; i < rank; ++i)
        v[static_cast<std::size_t>(i)] += static_cast<int>(p) * w[static_cast<std::size_t>(i)] -
                                          rho[static_cast<std::size_t>(i)];
    return v;
}

SymmetryReport verify_minuscule_symmetry(const RootDatum& datum, const AlcoveSymmetry& sigma,
                                         long long p) {
    require_p_above_h(datum, p);
    SymmetryReport report;
    const auto domain = alcove(datum, p);
    std::set<Weight> images;
    for (const Weight& lambda : domain) {
        const Weight image = apply_alcove_symmetry(datum, sigma, lambda, p);
        if (!in_alcove(datum, image, p)) return report;
        images.insert(image);
    }
    report.permutes_alcove = images.size() == domain.size();
    report.origin_image = apply_alcove_symmetry(datum, sigma, datum.zero_weight(), p);
    Weight expect = datum.fundamental_weight(sigma.minuscule_index);
    for (int& c : expect) c *= static_cast<int>(p - datum.coxeter_number());
    report.fixes_origin_image = report.origin_image == expect;
    return report;
}

Weight root_lattice_orbit_representative(const RootDatum& datum, const Weight& start,
                                         long long p) {
    if (!in_alcove(datum, start, p))
        throw std::invalid_argument("orbit representative wants an alcove weight");
    const auto symmetries = alcove_symmetries(datum);
    std::set<Weight> seen{start};
    std::vector<Weight> frontier{start};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& lambda : frontier)
            for (const AlcoveSymmetry& sigma : symmetries) {
                Weight image = apply_alcove_symmetry(datum, sigma, lambda, p);
                if (seen.insert(image).second) next.push_back(image);
            }
        frontier = std::move(next);
    }
    for (const Weight& lambda : seen) // std::set: lexicographically smallest first
        if (datum.in_root_lattice(lambda)) return lambda;
    throw std::logic_error("no orbit representative in the root lattice");
}

} // namespace verlinde
