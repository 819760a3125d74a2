#include "verlinde/character.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <stdexcept>

namespace verlinde {

namespace {

// Dominant weights of L(λ): the saturated set {μ dominant : λ - μ ∈ Q+}.
// Covers in the dominance order on dominant weights differ by a positive
// root, so closing under "subtract a positive root, stay dominant" reaches
// all of them.
std::vector<Weight> dominant_weights_below(const RootDatum& datum, const Weight& lambda) {
    std::set<Weight> seen{lambda};
    std::vector<Weight> queue{lambda};
    while (!queue.empty()) {
        const Weight v = queue.back();
        queue.pop_back();
        for (const Root& alpha : datum.positive_roots()) {
            Weight w = v;
            bool dominant = true;
            for (int i = 0; i < datum.rank(); ++i) {
                w[i] -= alpha.weight[i];
                if (w[i] < 0) dominant = false;
            }
            if (dominant && seen.insert(w).second) queue.push_back(std::move(w));
        }
    }
    return std::vector<Weight>(seen.begin(), seen.end());
}

} // namespace

DominantCharacter freudenthal_character(const RootDatum& datum, const Weight& lambda) {
    if (!datum.is_dominant(lambda))
        throw std::invalid_argument("highest weight must be dominant");

    std::vector<Weight> dominants = dominant_weights_below(datum, lambda);
    // Depth below λ (height of λ - μ); Freudenthal needs shallower weights first.
    auto depth = [&](const Weight& mu) {
        Weight diff(datum.rank());
        for (int i = 0; i < datum.rank(); ++i) diff[i] = lambda[i] - mu[i];
        return datum.root_lattice_height(diff);
    };
    std::vector<std::pair<long long, Weight>> order;
    order.reserve(dominants.size());
    for (Weight& mu : dominants) order.emplace_back(depth(mu), std::move(mu));
    std::sort(order.begin(), order.end());

    const Weight rho = datum.rho();
    auto shifted = [&](const Weight& mu) {
        Weight v = mu;
        for (int i = 0; i < datum.rank(); ++i) v[i] += rho[i];
        return v;
    };
    const Int top_norm = datum.scaled_weight_form(shifted(lambda), shifted(lambda));
    const Int det = datum.cartan_determinant();

    DominantCharacter chi;
    chi.highest = lambda;
    chi.mult[lambda] = 1;

    for (const auto& [dep, mu] : order) {
        if (dep == 0) continue; // λ itself
        Int numerator = 0;
        for (const Root& alpha : datum.positive_roots()) {
            const long long kmax = dep / alpha.height;
            Weight nu = mu;
            for (long long k = 1; k <= kmax; ++k) {
                for (int i = 0; i < datum.rank(); ++i) nu[i] += alpha.weight[i];
                const auto it = chi.mult.find(datum.dominant_representative(nu));
                if (it == chi.mult.end()) continue;
                // det(A) · (ν, α) = det(A) · (α,α)/2 · ⟨ν, α^∨⟩
                numerator += it->second * det * alpha.half_norm * datum.pair(nu, alpha.on_coroots);
            }
        }
        const Int denominator = top_norm - datum.scaled_weight_form(shifted(mu), shifted(mu));
        if (denominator <= 0) throw std::logic_error("Freudenthal denominator not positive");
        const Int twice = 2 * numerator;
        if (twice % denominator != 0) throw std::logic_error("Freudenthal division not exact");
        chi.mult[mu] = twice / denominator;
    }
    return chi;
}

Int weight_multiplicity(const RootDatum& datum, const DominantCharacter& chi, const Weight& mu) {
    const auto it = chi.mult.find(datum.dominant_representative(mu));
    return it == chi.mult.end() ? Int(0) : it->second;
}

std::vector<std::pair<Weight, Int>> expanded_weights(const RootDatum& datum,
                                                     const DominantCharacter& chi) {
    std::vector<std::pair<Weight, Int>> out;
    for (const auto& [mu, m] : chi.mult)
        for (Weight& w : datum.weyl_orbit(mu)) out.emplace_back(std::move(w), m);
    return out;
}

Int character_dimension(const RootDatum& datum, const DominantCharacter& chi) {
    Int total = 0;
    for (const auto& [mu, m] : chi.mult) total += m * datum.weyl_orbit(mu).size();
    return total;
}

// ---------------------------------------------------------------------------
// cache

namespace {

template <typename T>
void write_pod(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
bool read_pod(std::istream& is, T& v) {
    return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), sizeof v));
}

void write_bigint(std::ostream& os, const Int& v) {
    const std::string digits = v.str();
    write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(digits.size()));
    os.write(digits.data(), static_cast<std::streamsize>(digits.size()));
}

bool read_bigint(std::istream& is, Int& v) {
    std::uint32_t len = 0;
    if (!read_pod(is, len)) return false;
    std::string digits(len, '\0');
    if (!is.read(digits.data(), len)) return false;
    v = Int(digits);
    return true;
}

void write_weight(std::ostream& os, const Weight& w) {
    for (int c : w) write_pod<std::int32_t>(os, c);
}

bool read_weight(std::istream& is, int rank, Weight& w) {
    w.assign(rank, 0);
    for (int i = 0; i < rank; ++i) {
        std::int32_t c = 0;
        if (!read_pod(is, c)) return false;
        w[i] = c;
    }
    return true;
}

constexpr char kCacheMagic[8] = {'V', 'E', 'R', 'F', 'R', 'D', '0', '1'};

} // namespace

CharacterCache::CharacterCache() {
    if (const char* env = std::getenv("VERLINDE_CACHE_DIR")) dir_ = env;
    load_from_disk();
}

CharacterCache::CharacterCache(std::string dir) : dir_(std::move(dir)) { load_from_disk(); }

void CharacterCache::load_from_disk() {
    if (dir_.empty()) return;
    std::ifstream in(dir_ + "/freudenthal.bin", std::ios::binary);
    if (!in) return;
    char magic[8];
    if (!in.read(magic, 8) || !std::equal(magic, magic + 8, kCacheMagic)) return;
    for (;;) {
        char type = 0;
        std::uint32_t rank = 0;
        if (!read_pod(in, type) || !read_pod(in, rank) || rank == 0 || rank > 64) break;
        DominantCharacter chi;
        if (!read_weight(in, static_cast<int>(rank), chi.highest)) break;
        std::uint32_t entries = 0;
        if (!read_pod(in, entries)) break;
        bool ok = true;
        for (std::uint32_t e = 0; e < entries && ok; ++e) {
            Weight mu;
            Int m;
            ok = read_weight(in, static_cast<int>(rank), mu) && read_bigint(in, m);
            if (ok) chi.mult[std::move(mu)] = std::move(m);
        }
        if (!ok) break;
        memo_[Key{type, static_cast<int>(rank), chi.highest}] = std::move(chi);
    }
}

void CharacterCache::append_record(const Key& key, const DominantCharacter& value) {
    if (dir_.empty()) return;
    const std::string path = dir_ + "/freudenthal.bin";
    const bool fresh = !std::ifstream(path, std::ios::binary).good();
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) return; // cache is best-effort; never fail a computation over it
    if (fresh) out.write(kCacheMagic, 8);
    write_pod<char>(out, std::get<0>(key));
    write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(std::get<1>(key)));
    write_weight(out, value.highest);
    write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(value.mult.size()));
    for (const auto& [mu, m] : value.mult) {
        write_weight(out, mu);
        write_bigint(out, m);
    }
}

DominantCharacter CharacterCache::dominant_character(const RootDatum& datum, const Weight& lambda) {
    const Key key{datum.type(), datum.rank(), lambda};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    DominantCharacter chi = freudenthal_character(datum, lambda);
    std::lock_guard<std::mutex> lock(mutex_);
    const auto [it, inserted] = memo_.emplace(key, std::move(chi));
    if (inserted) append_record(key, it->second);
    return it->second;
}

std::size_t CharacterCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.size();
}

CharacterCache& global_character_cache() {
    static CharacterCache cache;
    return cache;
}

DominantCharacter dominant_character(const RootDatum& datum, const Weight& lambda) {
    return global_character_cache().dominant_character(datum, lambda);
}

} // namespace verlinde
