#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gmrc {

// Finite group given by explicit tables. Element positions are 1-based and
// the identity always sits at position 1; sigma/tau block indexing and the
// published coefficient subscripts A_1..A_n both rely on this convention.
struct FiniteGroup {
    std::string name;
    std::size_t order = 0;
    std::vector<std::size_t> mul_table;  // (i-1)*order + (j-1) -> position of g_i g_j
    std::vector<std::size_t> inv_table;  // (i-1) -> position of g_i^{-1}
    std::vector<std::string> labels;

    std::size_t mul(std::size_t i, std::size_t j) const {
        return mul_table[(i - 1) * order + (j - 1)];
    }
    std::size_t inv(std::size_t i) const { return inv_table[i - 1]; }
    const std::string& label(std::size_t i) const { return labels[i - 1]; }
};

// Listing g_{1+i} = x^i.
FiniteGroup cyclic_group(std::size_t n);

// Order 2m with listing g_{1+i+mj} = x^i y^j; relations x^m = y^2 = 1 and
// y x = x^{-1} y.
FiniteGroup dihedral_group(std::size_t m);

// Cyclic group of order r*s listed as g_{1+i+rj} = x^{s*i+j}.
FiniteGroup cyclic_split_group(std::size_t r, std::size_t s);

// nullopt when the tables describe a group; otherwise the first violation.
std::optional<std::string> validate_group(const FiniteGroup& g);

// "C<n>", "D<order>" (order even), "C<r>_<s>", or "Csplit:<r>,<s>".
std::optional<FiniteGroup> group_from_name(const std::string& name);

}  // namespace gmrc
