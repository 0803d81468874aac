#include "gmrc/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gmrc {

std::string kind_to_string(Kind72 k) {
    switch (k) {
        case Kind72::TypeI_W1: return "TypeI-W1";
        case Kind72::TypeI_W2: return "TypeI-W2";
        case Kind72::TypeII: return "TypeII";
    }
    return "?";
}

Kind72 kind_from_string(const std::string& s) {
    if (s == "TypeI-W1") return Kind72::TypeI_W1;
    if (s == "TypeI-W2") return Kind72::TypeI_W2;
    if (s == "TypeII") return Kind72::TypeII;
    throw std::invalid_argument("unknown enumerator kind " + s);
}

LinearCode code_from_rows(const BinaryMatrix& gen) {
    LinearCode c;
    c.length = gen.cols();
    c.gen = gen;
    RowReduceResult red = row_reduce(gen);
    c.rank = red.rank;
    c.pivots = red.pivots;
    c.basis = BinaryMatrix(red.rank, gen.cols());
    for (std::size_t r = 0; r < red.rank; ++r)
        for (std::size_t w = 0; w < c.basis.words_per_row(); ++w)
            c.basis.row(r)[w] = red.rref.row(r)[w];
    return c;
}

LinearCode dual(const LinearCode& c) {
    std::size_t n = c.length, r = c.rank;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : c.pivots) is_pivot[p] = true;
    BinaryMatrix h(n - r, n);
    std::size_t row = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        h.set(row, f, 1);
        for (std::size_t i = 0; i < r; ++i)
            if (c.basis.get(i, f)) h.set(row, c.pivots[i], 1);
        ++row;
    }
    return code_from_rows(h);
}

bool is_self_orthogonal(const LinearCode& c) {
    if (c.rank == 0) return true;
    return mat_mul(c.basis, transpose(c.basis)).is_zero();
}

bool is_self_dual(const LinearCode& c) {
    if (c.length % 2 != 0 || c.rank != c.length / 2) return false;
    return is_self_orthogonal(c);
}

bool is_doubly_even(const LinearCode& c) {
    if (!is_self_orthogonal(c))
        throw std::invalid_argument("is_doubly_even: code is not self-orthogonal");
    for (std::size_t r = 0; r < c.rank; ++r)
        if (c.basis.row_weight(r) % 4 != 0) return false;
    return true;
}

bool code_contains(const LinearCode& c, const BinaryMatrix& word) {
    if (word.rows() != 1 || word.cols() != c.length)
        throw std::invalid_argument("code_contains: expected a 1 x n word");
    std::vector<std::uint64_t> acc(word.row(0), word.row(0) + word.words_per_row());
    for (std::size_t i = 0; i < c.rank; ++i) {
        std::size_t p = c.pivots[i];
        if ((acc[p >> 6] >> (p & 63)) & 1u)
            for (std::size_t w = 0; w < c.basis.words_per_row(); ++w)
                acc[w] ^= c.basis.row(i)[w];
    }
    for (std::uint64_t w : acc)
        if (w) return false;
    return true;
}

// ---- weight enumeration -------------------------------------------------

namespace {

// Disjoint information sets, greedily: the first is the pivot set of the
// basis; later ones come from re-reducing with previously used columns
// forbidden, as long as full rank survives.
std::vector<std::vector<std::size_t>> disjoint_information_sets(const LinearCode& c) {
    std::vector<std::vector<std::size_t>> sets;
    std::vector<bool> used(c.length, false);
    while (true) {
        BinaryMatrix m = c.basis;
        std::vector<std::size_t> piv;
        std::size_t r = 0;
        for (std::size_t col = 0; col < c.length && r < c.rank; ++col) {
            if (used[col]) continue;
            std::size_t p = m.rows();
            for (std::size_t i = r; i < m.rows(); ++i)
                if (m.get(i, col)) { p = i; break; }
            if (p == m.rows()) continue;
            m.swap_rows(r, p);
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (i != r && m.get(i, col)) m.xor_rows(i, r);
            piv.push_back(col);
            ++r;
        }
        if (r < c.rank) break;
        for (std::size_t col : piv) used[col] = true;
        sets.push_back(std::move(piv));
    }
    return sets;
}

// Generator in systematic form over the given information set: rows scaled
// so that the restriction of a codeword to the set equals its message.
BinaryMatrix systematic_over(const LinearCode& c, const std::vector<std::size_t>& set) {
    BinaryMatrix sub(c.rank, c.rank);
    for (std::size_t i = 0; i < c.rank; ++i)
        for (std::size_t j = 0; j < c.rank; ++j)
            if (c.basis.get(i, set[j])) sub.set(i, j, 1);
    auto inv = inverse(sub);
    if (!inv) throw std::logic_error("information set is not invertible");
    return mat_mul(*inv, c.basis);
}

struct PackedWord {
    std::uint64_t a = 0, b = 0;
    bool operator==(const PackedWord& o) const { return a == o.a && b == o.b; }
};

struct PackedWordHash {
    std::size_t operator()(const PackedWord& w) const {
        std::uint64_t h = w.a * 0x9e3779b97f4a7c15ull;
        h ^= w.b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return std::size_t(h);
    }
};

// Enumerate messages of weight exactly t over one systematic generator,
// calling fn(words, weight) for each codeword. k <= 64.
template <typename Fn>
void enumerate_weight(const BinaryMatrix& gen, std::size_t t, Fn&& fn) {
    std::size_t k = gen.rows();
    std::size_t wpr = gen.words_per_row();
    std::vector<std::uint64_t> acc(wpr);
    if (t == 0 || t > k) return;
    std::uint64_t m = (t == 64) ? ~0ull : ((std::uint64_t(1) << t) - 1);
    std::uint64_t last = m << (k - t);
    while (true) {
        std::fill(acc.begin(), acc.end(), 0);
        std::uint64_t bits = m;
        while (bits) {
            std::size_t j = std::size_t(std::countr_zero(bits));
            bits &= bits - 1;
            const std::uint64_t* row = gen.row(j);
            for (std::size_t w = 0; w < wpr; ++w) acc[w] ^= row[w];
        }
        std::size_t weight = 0;
        for (std::size_t w = 0; w < wpr; ++w) weight += std::size_t(std::popcount(acc[w]));
        fn(acc, weight);
        if (m == last) break;
        std::uint64_t c = m & -m;
        std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

// Full 2^k enumeration in Gray-code order; used when the dimension is small
// enough that it beats any information-set schedule.
template <typename Fn>
void enumerate_all(const BinaryMatrix& basis, Fn&& fn) {
    std::size_t k = basis.rows();
    std::size_t wpr = basis.words_per_row();
    std::vector<std::uint64_t> acc(wpr, 0);
    std::uint64_t total = std::uint64_t(1) << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        std::size_t j = std::size_t(std::countr_zero(i));
        const std::uint64_t* row = basis.row(j);
        for (std::size_t w = 0; w < wpr; ++w) acc[w] ^= row[w];
        std::size_t weight = 0;
        for (std::size_t w = 0; w < wpr; ++w) weight += std::size_t(std::popcount(acc[w]));
        fn(acc, weight);
    }
}

constexpr std::size_t kFullEnumMaxDim = 20;

}  // namespace

WeightProfile weights_upto(const LinearCode& c, std::size_t w_max) {
    WeightProfile p;
    p.w_max = w_max;
    p.counts.assign(w_max + 1, 0);
    p.counts[0] = 1;
    if (c.rank == 0) return p;

    if (c.rank <= kFullEnumMaxDim) {
        enumerate_all(c.basis, [&](const std::vector<std::uint64_t>&, std::size_t w) {
            if (w <= w_max) ++p.counts[w];
        });
        return p;
    }
    if (c.rank > 64)
        throw std::runtime_error("weights_upto: dimension above 64 not supported");

    auto sets = disjoint_information_sets(c);
    std::size_t s = sets.size();
    std::size_t r = w_max / s;  // smallest r with s*(r+1) > w_max
    std::vector<BinaryMatrix> gens;
    gens.reserve(s);
    for (const auto& set : sets) gens.push_back(systematic_over(c, set));

    if (c.length <= 128) {
        std::unordered_set<PackedWord, PackedWordHash> seen;
        for (const BinaryMatrix& g : gens)
            for (std::size_t t = 1; t <= r && t <= c.rank; ++t)
                enumerate_weight(g, t, [&](const std::vector<std::uint64_t>& acc, std::size_t w) {
                    if (w > w_max) return;
                    PackedWord pw{acc[0], acc.size() > 1 ? acc[1] : 0};
                    if (seen.insert(pw).second) ++p.counts[w];
                });
    } else {
        std::unordered_set<std::string> seen;
        for (const BinaryMatrix& g : gens)
            for (std::size_t t = 1; t <= r && t <= c.rank; ++t)
                enumerate_weight(g, t, [&](const std::vector<std::uint64_t>& acc, std::size_t w) {
                    if (w > w_max) return;
                    std::string key(reinterpret_cast<const char*>(acc.data()),
                                    acc.size() * sizeof(std::uint64_t));
                    if (seen.insert(std::move(key)).second) ++p.counts[w];
                });
    }
    return p;
}

std::size_t min_distance(const LinearCode& c) {
    if (c.rank == 0) throw std::invalid_argument("min_distance: zero code");

    if (c.rank <= kFullEnumMaxDim) {
        std::size_t best = c.length + 1;
        enumerate_all(c.basis, [&](const std::vector<std::uint64_t>&, std::size_t w) {
            if (w > 0 && w < best) best = w;
        });
        return best;
    }
    if (c.rank > 64)
        throw std::runtime_error("min_distance: dimension above 64 not supported");

    auto sets = disjoint_information_sets(c);
    std::size_t s = sets.size();
    std::vector<BinaryMatrix> gens;
    gens.reserve(s);
    for (const auto& set : sets) gens.push_back(systematic_over(c, set));

    std::size_t best = c.length + 1;
    for (std::size_t i = 0; i < c.rank; ++i)
        best = std::min(best, c.basis.row_weight(i));
    for (std::size_t t = 1; t <= c.rank; ++t) {
        // After the weight-t round every codeword with fewer than t+1 ones in
        // some information set has been seen; a missed word weighs >= s(t+1).
        for (const BinaryMatrix& g : gens)
            enumerate_weight(g, t, [&](const std::vector<std::uint64_t>&, std::size_t w) {
                if (w > 0 && w < best) best = w;
            });
        if (best <= s * (t + 1) - 1) return best;
    }
    return best;
}

Classification72 classify_72(const LinearCode& c) {
    return classify_72(c, weights_upto(c, 16));
}

Classification72 classify_72(const LinearCode& c, const WeightProfile& profile) {
    if (c.length != 72 || c.rank != 36 || !is_self_dual(c))
        throw std::invalid_argument("classify_72: expected a self-dual [72,36] code");
    if (profile.w_max < 16)
        throw std::invalid_argument("classify_72: profile must reach weight 16");
    long long a12 = (long long)profile.at(12);
    long long a14 = (long long)profile.at(14);
    long long a16 = (long long)profile.at(16);

    Classification72 out;
    if (is_doubly_even(c)) {
        out.kind = Kind72::TypeII;
        out.alpha = a12 - 4398;
        if (a14 != 0 || a16 != 197073 - 12 * out.alpha)
            throw std::runtime_error("classify_72: doubly-even spectrum inconsistent");
        return out;
    }
    if (a12 % 2 != 0) throw std::runtime_error("classify_72: odd A_12");
    long long beta = a12 / 2;
    if ((8640 - a14) % 64 == 0) {
        long long gamma = (8640 - a14) / 64;
        if (a16 == 124281 - 24 * beta + 384 * gamma) {
            out.kind = Kind72::TypeI_W1;
            out.gamma = gamma;
            out.beta = beta;
            return out;
        }
    }
    if ((7616 - a14) % 64 == 0) {
        long long gamma = (7616 - a14) / 64;
        if (a16 == 134521 - 24 * beta + 384 * gamma) {
            out.kind = Kind72::TypeI_W2;
            out.gamma = gamma;
            out.beta = beta;
            return out;
        }
    }
    throw std::runtime_error("classify_72: no enumerator shape fits");
}

bool is_extremal(std::size_t n, std::size_t d, SelfDualKind kind) {
    if (n % 2 != 0) throw std::invalid_argument("is_extremal: odd length");
    std::size_t bound = 4 * (n / 24) + 4;
    if (kind == SelfDualKind::TypeI && n % 24 == 22) bound = 4 * (n / 24) + 6;
    return d == bound;
}

bool quasi_group_invariant(const LinearCode& c, const FiniteGroup& g, std::size_t k) {
    if (c.length != k * g.order)
        throw std::invalid_argument("quasi_group_invariant: length != k * order");
    for (std::size_t h = 1; h <= g.order; ++h) {
        for (std::size_t i = 0; i < c.rank; ++i) {
            BinaryMatrix p(1, c.length);
            for (std::size_t j = 1; j <= g.order; ++j) {
                std::size_t dst = g.mul(h, j);
                for (std::size_t o = 0; o < k; ++o)
                    if (c.basis.get(i, (j - 1) * k + o)) p.set(0, (dst - 1) * k + o, 1);
            }
            if (!code_contains(c, p)) return false;
        }
    }
    return true;
}

std::string profile_text(const WeightProfile& p) {
    std::ostringstream out;
    out << "w_max=" << p.w_max << "\n";
    for (std::size_t w = 0; w < p.counts.size(); ++w)
        if (p.counts[w]) out << "A_" << w << "=" << p.counts[w] << "\n";
    return out.str();
}

std::string classification_text(const Classification72& c) {
    std::ostringstream out;
    out << "kind=" << kind_to_string(c.kind) << "\n";
    if (c.kind == Kind72::TypeII)
        out << "alpha=" << c.alpha << "\n";
    else
        out << "gamma=" << c.gamma << "\n" << "beta=" << c.beta << "\n";
    return out.str();
}

}  // namespace gmrc
