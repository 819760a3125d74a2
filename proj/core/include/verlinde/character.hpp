#ifndef VERLINDE_CHARACTER_HPP
#define VERLINDE_CHARACTER_HPP

// Characters of simple highest-weight modules, computed with Freudenthal's
// multiplicity formula.  Only weights in the lowest p-alcove are ever asked
// for, where the modular simple, the Weyl module and the characteristic-zero
// simple all share one character, so the classical formula applies verbatim.

#include "verlinde/bigint.hpp"
#include "verlinde/root_datum.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace verlinde {

struct DominantCharacter {
    Weight highest;
    std::map<Weight, Int> mult; // dominant weights only; W-invariance gives the rest
};

// Multiplicity of an arbitrary (not necessarily dominant) weight.
Int weight_multiplicity(const RootDatum& datum, const DominantCharacter& chi, const Weight& mu);

// All weights with their multiplicities, each dominant orbit expanded.
std::vector<std::pair<Weight, Int>> expanded_weights(const RootDatum& datum,
                                                     const DominantCharacter& chi);

// Σ multiplicities over the full orbit expansion (equals the Weyl dimension).
Int character_dimension(const RootDatum& datum, const DominantCharacter& chi);

// Memoising Freudenthal evaluator.  Thread-safe: concurrent callers for the
// same key race only on who inserts first; the value is identical.  When
// constructed with a non-empty directory (default: $VERLINDE_CACHE_DIR) the
// memo is loaded from and appended to <dir>/freudenthal.bin as
// length-prefixed binary records: type label byte, rank, highest-weight
// coordinates, then the multiplicity map.
class CharacterCache {
public:
    CharacterCache();                          // honour VERLINDE_CACHE_DIR if set
    explicit CharacterCache(std::string dir);  // empty string = in-memory only

    DominantCharacter dominant_character(const RootDatum& datum, const Weight& lambda);

    std::size_t size() const;

private:
    using Key = std::tuple<char, int, Weight>;
    void load_from_disk();
    void append_record(const Key& key, const DominantCharacter& value);

    std::string dir_;
    mutable std::mutex mutex_;
    std::map<Key, DominantCharacter> memo_;
};

// Process-wide cache used by the convenience wrapper below.
CharacterCache& global_character_cache();
DominantCharacter dominant_character(const RootDatum& datum, const Weight& lambda);

// The raw computation, no memo.  Exposed for tests.
DominantCharacter freudenthal_character(const RootDatum& datum, const Weight& lambda);

} // namespace verlinde

#endif
