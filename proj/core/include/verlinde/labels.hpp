#ifndef VERLINDE_LABELS_HPP
#define VERLINDE_LABELS_HPP

// Two node-labelling conventions are in circulation for the exceptional
// Dynkin diagrams; the library computes in Bourbaki numbering throughout and
// this translation layer is applied only at the command-line boundary.

#include "verlinde/root_datum.hpp"

#include <string>
#include <vector>

namespace verlinde {

enum class LabelConvention { bourbaki, paper };

// paper index i (1-based) -> Bourbaki index.  Identity except on E6/E7/E8/F4.
int to_bourbaki_index(const RootDatum& datum, int i);
int from_bourbaki_index(const RootDatum& datum, int i);

// Reorder fundamental-weight coordinates between the conventions.
Weight to_bourbaki(const RootDatum& datum, const Weight& lambda, LabelConvention from);
Weight from_bourbaki(const RootDatum& datum, const Weight& lambda, LabelConvention to);

// "w1", "3w2+w4", "adjoint", "0": node numbers are read in `conv`, the result
// is always Bourbaki coordinates; throws std::invalid_argument on malformed
// input.
Weight parse_weight(const RootDatum& datum, const std::string& text, LabelConvention conv);

std::string weight_to_string(const Weight& lambda);

} // namespace verlinde

#endif
