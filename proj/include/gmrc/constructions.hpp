#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gmrc/binary_matrix.hpp"
#include "gmrc/group_matrix_ring.hpp"
#include "gmrc/linear_code.hpp"

namespace gmrc {

using Bits = std::vector<std::uint8_t>;

enum class BlockShape { Circulant, ReverseCirculant, Persymmetric2 };

struct BlockTemplate {
    BlockShape shape;
    std::size_t size;
    std::size_t arity;  // free bits: size for the circulant shapes, 3 for Persymmetric2
};

// How a spec's block list turns into the n coefficient matrices of v.
//
// PerCoefficient: one block per group element, in listing order.
// DoubleBlock: twelve 3x3 leaf blocks over C_2 with k = 18; leaves 1..6 form
// the first coefficient and 7..12 the second, each tiled as [[A,B],[B,A]]
// where A is the block-circulant of leaves 1..3 and B the block-Hankel of
// leaves 4..6.
enum class Assembly { PerCoefficient, DoubleBlock };

struct ConstructionSpec {
    std::string name;
    FiniteGroup group;
    std::size_t k = 0;
    std::vector<BlockTemplate> blocks;
    std::size_t bit_budget = 0;
    Assembly assembly = Assembly::PerCoefficient;
    // Circulant pair (a,b) read as first row (b,a); the published first-row
    // listing for this layout runs against the coefficient order.
    bool swap_circulant_pairs = false;
    // Table-row field layout, in order: (canonical name, bit count).
    std::vector<std::pair<std::string, std::size_t>> fields;
};

BinaryMatrix build_block(const BlockTemplate& t, const Bits& bits);

// The coefficient element of v for this spec and bit vector.
GroupMatrixRingElement assemble_element(const ConstructionSpec& s, const Bits& bits);

BinaryMatrix build_tau(const ConstructionSpec& s, const Bits& bits);

// Code spanned by [I | tau].
LinearCode build_generator(const ConstructionSpec& s, const Bits& bits);

const std::vector<ConstructionSpec>& registered_specs();
const ConstructionSpec* find_spec(const std::string& name);

// Published table fields -> flat bit vector. Field names are matched after
// dropping '_', '{' and '}', so "r_{Y_0}", "r_Y0" and "rY0" are equivalent.
Bits decode_table_row(const ConstructionSpec& s,
                      const std::map<std::string, std::string>& fields);

// Inverse of decode_table_row, for rendering records.
std::vector<std::pair<std::string, std::string>> encode_table_row(
    const ConstructionSpec& s, const Bits& bits);

Bits parse_bits(const std::string& text, std::size_t expected);
std::string bits_to_string(const Bits& bits);
std::string bits_to_hex(const Bits& bits);
Bits bits_from_hex(const std::string& hex, std::size_t count);

}  // namespace gmrc
