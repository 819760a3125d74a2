#include "verlinde/root_datum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace verlinde {

namespace {

std::vector<std::vector<int>> cartan_matrix_for(char type, int rank) {
    const int r = rank;
    std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) a[i][i] = 2;
    auto bond = [&](int i, int j) { // simply-laced edge, 0-based
        a[i][j] = -1;
        a[j][i] = -1;
    };
    switch (type) {
    case 'A':
        for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
        break;
    case 'B': // α_r short
        for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
        a[r - 1][r - 2] = -2;
        break;
    case 'C': // α_r long
        for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
        a[r - 2][r - 1] = -2;
        break;
    case 'D':
        for (int i = 0; i + 1 < r - 1; ++i) bond(i, i + 1);
        bond(r - 3, r - 1);
        break;
    case 'E':
        // chain 1-3-4-5-6(-7)(-8), branch node 2 attached to 4
        bond(0, 2);
        for (int i = 2; i + 1 < r; ++i) bond(i, i + 1);
        bond(1, 3);
        break;
    case 'F': // α_1, α_2 long; α_3, α_4 short
        bond(0, 1);
        bond(1, 2);
        bond(2, 3);
        a[2][1] = -2;
        break;
    case 'G': // α_1 short, α_2 long
        a[0][1] = -3;
        a[1][0] = -1;
        break;
    default:
        throw std::invalid_argument("unknown simple type");
    }
    return a;
}

void validate_pair(char type, int rank) {
    bool ok = false;
    switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break; // D3 = A3 relabelled, used by the half-spin family
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
    }
    if (!ok) {
        std::ostringstream msg;
        msg << "invalid simple type/rank pair " << type << rank;
        throw std::invalid_argument(msg.str());
    }
}

// Minimal positive integers d_i with d_i A_ij = d_j A_ji; with this Cartan
// convention d_i = (α_i,α_i)/2 once short roots are normalised to d = 1.
std::vector<int> symmetrizer_for(const std::vector<std::vector<int>>& a) {
    const int r = static_cast<int>(a.size());
    std::vector<Rat> d(r, Rat(0));
    d[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < r; ++j) {
            if (j == i || a[i][j] == 0 || d[j] != 0) continue;
            d[j] = d[i] * a[i][j] / a[j][i];
            stack.push_back(j);
        }
    }
    Int common_den = 1;
    for (const Rat& x : d) {
        if (x == 0) throw std::logic_error("Dynkin diagram not connected");
        common_den = boost::multiprecision::lcm(common_den, rat_den(x));
    }
    std::vector<Int> ints(r);
    Int g = 0;
    for (int i = 0; i < r; ++i) {
        ints[i] = rat_num(d[i]) * (common_den / rat_den(d[i]));
        g = boost::multiprecision::gcd(g, ints[i]);
    }
    std::vector<int> out(r);
    for (int i = 0; i < r; ++i) out[i] = static_cast<int>(ints[i] / g);
    return out;
}

} // namespace

RootDatum RootDatum::build(char type, int rank) {
    validate_pair(type, rank);
    RootDatum d;
    d.type_ = type;
    d.rank_ = rank;
    d.cartan_ = cartan_matrix_for(type, rank);
    d.symmetrizer_ = symmetrizer_for(d.cartan_);
    d.generate_roots();
    d.finish_tables();
    return d;
}

std::string RootDatum::name() const {
    std::ostringstream s;
    s << type_ << rank_;
    return s.str();
}

void RootDatum::generate_roots() {
    const int r = rank_;
    std::map<std::vector<int>, std::size_t> index_of;
    positive_.clear();

    auto add_root = [&](std::vector<int> coeffs) {
        Root root;
        root.on_roots = std::move(coeffs);
        root.weight.assign(r, 0);
        root.height = 0;
        for (int i = 0; i < r; ++i) {
            root.height += root.on_roots[i];
            for (int j = 0; j < r; ++j) root.weight[i] += cartan_[i][j] * root.on_roots[j];
        }
        // (α,α)/2 through the symmetrised form (α_i, α_j) = d_i A_ij.
        long long twice_norm = 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                twice_norm += static_cast<long long>(root.on_roots[i]) * root.on_roots[j] *
                              symmetrizer_[i] * cartan_[i][j];
        if (twice_norm <= 0 || twice_norm % 2 != 0)
            throw std::logic_error("non-positive root norm");
        root.half_norm = static_cast<int>(twice_norm / 2);
        root.on_coroots.assign(r, 0);
        for (int i = 0; i < r; ++i) {
            const int num = root.on_roots[i] * symmetrizer_[i];
            if (num % root.half_norm != 0)
                throw std::logic_error("non-integral coroot coordinate");
            root.on_coroots[i] = num / root.half_norm;
        }
        index_of.emplace(root.on_roots, positive_.size());
        positive_.push_back(std::move(root));
    };

    for (int i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        add_root(std::move(e));
    }

    // Grow by height using root strings: α + α_i is a root iff the length of
    // the string below α in direction α_i exceeds ⟨α, α_i^∨⟩.
    for (std::size_t pos = 0; pos < positive_.size(); ++pos) {
        for (int i = 0; i < r; ++i) {
            const std::vector<int> coeffs = positive_[pos].on_roots; // copy: vector may grow
            std::vector<int> probe = coeffs;
            int down = 0;
            while (true) {
                probe[i] -= 1;
                if (probe[i] < 0 || !index_of.count(probe)) break;
                ++down;
            }
            const int pairing = positive_[pos].weight[i];
            if (down - pairing >= 1) {
                std::vector<int> up = coeffs;
                up[i] += 1;
                if (!index_of.count(up)) add_root(std::move(up));
            }
        }
    }

    std::sort(positive_.begin(), positive_.end(), [](const Root& x, const Root& y) {
        if (x.height != y.height) return x.height < y.height;
        return x.on_roots < y.on_roots;
    });
}

void RootDatum::finish_tables() {
    const int r = rank_;

    std::vector<std::size_t> dominant;
    for (std::size_t k = 0; k < positive_.size(); ++k) {
        if (std::all_of(positive_[k].weight.begin(), positive_[k].weight.end(),
                        [](int c) { return c >= 0; }))
            dominant.push_back(k);
    }
    if (dominant.empty() || dominant.size() > 2)
        throw std::logic_error("unexpected number of dominant roots");
    highest_long_ = dominant.front();
    highest_short_ = dominant.front();
    for (std::size_t k : dominant) {
        if (positive_[k].half_norm > positive_[highest_long_].half_norm) highest_long_ = k;
        if (positive_[k].half_norm < positive_[highest_short_].half_norm) highest_short_ = k;
    }

    coxeter_ = positive_[highest_long_].height + 1;

    two_rho_check_.assign(r, 0);
    for (const Root& root : positive_)
        for (int i = 0; i < r; ++i) two_rho_check_[i] += root.on_coroots[i];

    // Determinant and adjugate of the Cartan matrix via exact Gauss-Jordan.
    std::vector<std::vector<Rat>> m(r, std::vector<Rat>(2 * r, Rat(0)));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) m[i][j] = cartan_[i][j];
        m[i][r + i] = 1;
    }
    Rat det = 1;
    for (int col = 0; col < r; ++col) {
        int pivot = -1;
        for (int row = col; row < r; ++row)
            if (m[row][col] != 0) { pivot = row; break; }
        if (pivot < 0) throw std::logic_error("singular Cartan matrix");
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rat inv = Rat(1) / m[col][col];
        for (int j = 0; j < 2 * r; ++j) m[col][j] *= inv;
        for (int row = 0; row < r; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rat f = m[row][col];
            for (int j = 0; j < 2 * r; ++j) m[row][j] -= f * m[col][j];
        }
    }
    cartan_det_ = rat_num(det);
    if (rat_den(det) != 1 || cartan_det_ <= 0)
        throw std::logic_error("Cartan determinant must be a positive integer");
    fundamental_order_ = static_cast<long long>(cartan_det_);
    cartan_adjugate_.assign(r, std::vector<Int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const Rat adj = m[i][r + j] * det; // adj(A) = det(A) A^{-1}
            if (rat_den(adj) != 1) throw std::logic_error("non-integral adjugate entry");
            cartan_adjugate_[i][j] = rat_num(adj);
        }

    minuscule_.clear();
    minuscule_.push_back(zero_weight());
    const std::vector<int>& marks = short_dominant_coroot();
    for (int i = 0; i < r; ++i)
        if (marks[i] == 1) minuscule_.push_back(fundamental_weight(i + 1));
    std::sort(minuscule_.begin(), minuscule_.end());
}

Weight RootDatum::fundamental_weight(int i) const {
    if (i < 1 || i > rank_) throw std::invalid_argument("fundamental weight index out of range");
    Weight w(rank_, 0);
    w[i - 1] = 1;
    return w;
}

long long RootDatum::pair(const Weight& lambda, const std::vector<int>& coroot) const {
    long long s = 0;
    for (int i = 0; i < rank_; ++i) s += static_cast<long long>(lambda[i]) * coroot[i];
    return s;
}

bool RootDatum::is_dominant(const Weight& lambda) const {
    return std::all_of(lambda.begin(), lambda.end(), [](int c) { return c >= 0; });
}

Weight RootDatum::simple_reflection(const Weight& lambda, int i) const {
    Weight out = lambda;
    const int c = lambda[i - 1];
    if (c == 0) return out;
    for (int j = 0; j < rank_; ++j) out[j] -= c * cartan_[j][i - 1];
    return out;
}

Weight RootDatum::dominant_representative(const Weight& lambda) const {
    Weight v = lambda;
    for (;;) {
        int i = 0;
        while (i < rank_ && v[i] >= 0) ++i;
        if (i == rank_) return v;
        v = simple_reflection(v, i + 1);
    }
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& dom) const {
    if (!is_dominant(dom)) throw std::invalid_argument("weyl_orbit wants a dominant weight");
    std::set<Weight> seen{dom};
    std::vector<Weight> queue{dom};
    while (!queue.empty()) {
        const Weight v = queue.back();
        queue.pop_back();
        for (int i = 1; i <= rank_; ++i) {
            Weight w = simple_reflection(v, i);
            if (seen.insert(w).second) queue.push_back(std::move(w));
        }
    }
    return std::vector<Weight>(seen.begin(), seen.end());
}

std::vector<Weight> RootDatum::alcove_weights(long long p) const {
    const long long budget = p - coxeter_;
    std::vector<Weight> out;
    if (budget < 0) return out;
    const std::vector<int>& marks = short_dominant_coroot();
    Weight current(rank_, 0);
    // lexicographic by construction: leftmost coordinate is the outer loop
    std::function<void(int, long long)> rec = [&](int i, long long left) {
        if (i == rank_) {
            out.push_back(current);
            return;
        }
        for (long long v = 0; v * marks[i] <= left; ++v) {
            current[i] = static_cast<int>(v);
            rec(i + 1, left - v * marks[i]);
        }
        current[i] = 0;
    };
    rec(0, budget);
    return out;
}

bool RootDatum::in_root_lattice(const Weight& lambda) const {
    // λ ∈ ZΦ iff adj(A)·λ ≡ 0 mod det(A); root coordinates are A^{-1} λ.
    for (int i = 0; i < rank_; ++i) {
        Int s = 0;
        for (int j = 0; j < rank_; ++j) s += cartan_adjugate_[i][j] * lambda[j];
        if (s % cartan_det_ != 0) return false;
    }
    return true;
}

Int RootDatum::scaled_weight_form(const Weight& x, const Weight& y) const {
    // (λ, μ) = λ^T D A^{-1} μ in fundamental-weight coordinates, D = diag(d_i).
    Int total = 0;
    for (int i = 0; i < rank_; ++i) {
        Int row = 0;
        for (int j = 0; j < rank_; ++j) row += cartan_adjugate_[i][j] * y[j];
        total += Int(x[i]) * symmetrizer_[i] * row;
    }
    return total;
}

long long RootDatum::root_lattice_height(const Weight& lambda) const {
    Int total = 0;
    for (int i = 0; i < rank_; ++i) {
        Int s = 0;
        for (int j = 0; j < rank_; ++j) s += cartan_adjugate_[i][j] * lambda[j];
        if (s % cartan_det_ != 0)
            throw std::invalid_argument("weight is not in the root lattice");
        total += s / cartan_det_;
    }
    return static_cast<long long>(total);
}

Int RootDatum::weyl_dimension(const Weight& lambda) const {
    if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dimension wants a dominant weight");
    Int num = 1, den = 1;
    for (const Root& root : positive_) {
        long long np = 0, dp = 0;
        for (int i = 0; i < rank_; ++i) {
            np += static_cast<long long>(lambda[i] + 1) * root.on_coroots[i];
            dp += root.on_coroots[i];
        }
        num *= np;
        den *= dp;
    }
    if (num % den != 0) throw std::logic_error("Weyl dimension not integral");
    return num / den;
}

} // namespace verlinde
