#include "verlinde/labels.hpp"

#include <cctype>
#include <stdexcept>

namespace verlinde {

namespace {

// permutation[i-1] = Bourbaki index of the convention's node i
std::vector<int> paper_permutation(const RootDatum& datum) {
    switch (datum.type()) {
    case 'E':
        if (datum.rank() == 6) return {6, 5, 4, 3, 1, 2};
        if (datum.rank() == 7) return {7, 6, 5, 4, 3, 1, 2};
        return {8, 7, 6, 5, 4, 3, 1, 2};
    case 'F':
        return {4, 3, 2, 1};
    default: {
        std::vector<int> id(static_cast<std::size_t>(datum.rank()));
        for (int i = 1; i <= datum.rank(); ++i) id[static_cast<std::size_t>(i - 1)] = i;
        return id;
    }
    }
}

} // namespace

int to_bourbaki_index(const RootDatum& datum, int i) {
    if (i < 1 || i > datum.rank()) throw std::invalid_argument("node index out of range");
    return paper_permutation(datum)[static_cast<std::size_t>(i - 1)];
}

int from_bourbaki_index(const RootDatum& datum, int i) {
    if (i < 1 || i > datum.rank()) throw std::invalid_argument("node index out of range");
    const auto perm = paper_permutation(datum);
    for (int j = 1; j <= datum.rank(); ++j)
        if (perm[static_cast<std::size_t>(j - 1)] == i) return j;
    throw std::logic_error("label permutation is not a bijection");
}

Weight to_bourbaki(const RootDatum& datum, const Weight& lambda, LabelConvention from) {
    if (from == LabelConvention::bourbaki) return lambda;
    Weight out(lambda.size(), 0);
    for (int i = 1; i <= datum.rank(); ++i)
        out[static_cast<std::size_t>(to_bourbaki_index(datum, i) - 1)] =
            lambda[static_cast<std::size_t>(i - 1)];
    return out;
}

Weight from_bourbaki(const RootDatum& datum, const Weight& lambda, LabelConvention to) {
    if (to == LabelConvention::bourbaki) return lambda;
    Weight out(lambda.size(), 0);
    for (int i = 1; i <= datum.rank(); ++i)
        out[static_cast<std::size_t>(i - 1)] =
            lambda[static_cast<std::size_t>(to_bourbaki_index(datum, i) - 1)];
    return out;
}

Weight parse_weight(const RootDatum& datum, const std::string& text, LabelConvention conv) {
    if (text == "adjoint") return datum.highest_root().weight; // already Bourbaki
    Weight lambda(static_cast<std::size_t>(datum.rank()), 0);
    if (text == "0" || text == "zero") return lambda;

    std::size_t pos = 0;
    const auto fail = [&]() { throw std::invalid_argument("cannot parse weight '" + text + "'"); };
    if (text.empty()) fail();
    while (pos < text.size()) {
        long long coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                coeff = coeff * 10 + (text[pos++] - '0');
            if (pos < text.size() && text[pos] == '*') ++pos;
        }
        if (pos >= text.size() || (text[pos] != 'w' && text[pos] != 'W')) fail();
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
        int node = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            node = node * 10 + (text[pos++] - '0');
        if (node < 1 || node > datum.rank()) fail();
        lambda[static_cast<std::size_t>(node - 1)] += static_cast<int>(coeff);
        if (pos < text.size()) {
            if (text[pos] != '+') fail();
            ++pos;
            if (pos >= text.size()) fail(); // trailing '+'
        }
    }
    return to_bourbaki(datum, lambda, conv);
}

std::string weight_to_string(const Weight& lambda) {
    std::string out;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (lambda[i] != 1) out += std::to_string(lambda[i]);
        out += "w" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

} // namespace verlinde
