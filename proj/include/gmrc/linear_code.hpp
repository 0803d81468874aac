#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gmrc/binary_matrix.hpp"
#include "gmrc/finite_group.hpp"

namespace gmrc {

// Binary linear code held as the original generator rows plus a cached
// reduced basis (the nonzero rows of the rref).
struct LinearCode {
    std::size_t length = 0;
    BinaryMatrix gen;
    BinaryMatrix basis;                // rank x length, reduced
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

// Exact codeword counts A_w for every w <= w_max.
struct WeightProfile {
    std::size_t w_max = 0;
    std::vector<std::uint64_t> counts;  // indexed by weight, size w_max + 1

    std::uint64_t at(std::size_t w) const { return w < counts.size() ? counts[w] : 0; }
};

enum class Kind72 { TypeI_W1, TypeI_W2, TypeII };
std::string kind_to_string(Kind72 k);
Kind72 kind_from_string(const std::string& s);

// Weight-enumerator parameters of a self-dual [72,36,12] code: alpha for the
// doubly-even shape, (gamma, beta) for the two singly-even shapes.
struct Classification72 {
    Kind72 kind = Kind72::TypeI_W1;
    long long alpha = 0;
    long long gamma = 0;
    long long beta = 0;
};

enum class SelfDualKind { TypeI, TypeII };

LinearCode code_from_rows(const BinaryMatrix& gen);
LinearCode dual(const LinearCode& c);
bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

// Generator-row criterion; requires a self-orthogonal code.
bool is_doubly_even(const LinearCode& c);

bool code_contains(const LinearCode& c, const BinaryMatrix& word);  // 1 x n

WeightProfile weights_upto(const LinearCode& c, std::size_t w_max);
std::size_t min_distance(const LinearCode& c);

Classification72 classify_72(const LinearCode& c);
Classification72 classify_72(const LinearCode& c, const WeightProfile& profile);

bool is_extremal(std::size_t n, std::size_t d, SelfDualKind kind);

// True when every left translation h permutes the k-wide coordinate blocks
// into a map that sends the code onto itself.
bool quasi_group_invariant(const LinearCode& c, const FiniteGroup& g, std::size_t k);

std::string profile_text(const WeightProfile& p);
std::string classification_text(const Classification72& c);

}  // namespace gmrc
