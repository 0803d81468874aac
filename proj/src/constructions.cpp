#include "gmrc/constructions.hpp"

#include <stdexcept>

namespace gmrc {

BinaryMatrix build_block(const BlockTemplate& t, const Bits& bits) {
    if (bits.size() != t.arity)
        throw std::invalid_argument("build_block: arity mismatch");
    std::size_t k = t.size;
    BinaryMatrix m(k, k);
    switch (t.shape) {
        case BlockShape::Circulant:
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (bits[(j + k - i) % k]) m.set(i, j, 1);
            break;
        case BlockShape::ReverseCirculant:
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (bits[(i + j) % k]) m.set(i, j, 1);
            break;
        case BlockShape::Persymmetric2:
            if (k != 2)
                throw std::invalid_argument("build_block: Persymmetric2 needs size 2");
            if (bits[0]) { m.set(0, 0, 1); m.set(1, 1, 1); }
            if (bits[1]) m.set(0, 1, 1);
            if (bits[2]) m.set(1, 0, 1);
            break;
    }
    return m;
}

namespace {

Bits slice(const Bits& bits, std::size_t from, std::size_t count) {
    return Bits(bits.begin() + long(from), bits.begin() + long(from + count));
}

// 9x9 arrangement of three 3x3 blocks: circulant tiling block(i,j) =
// M[(j-i) mod 3], Hankel tiling block(i,j) = M[(i+j) mod 3].
BinaryMatrix tile3(const std::vector<BinaryMatrix>& blocks, bool hankel) {
    BinaryMatrix out(9, 9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const BinaryMatrix& b = blocks[hankel ? (i + j) % 3 : (j + 3 - i) % 3];
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c)
                    if (b.get(r, c)) out.set(3 * i + r, 3 * j + c, 1);
        }
    return out;
}

BinaryMatrix double_block_coefficient(const ConstructionSpec& s, const Bits& bits,
                                      std::size_t first_leaf) {
    std::vector<BinaryMatrix> leaves;
    for (std::size_t t = first_leaf; t < first_leaf + 6; ++t)
        leaves.push_back(build_block(s.blocks[t], slice(bits, 3 * t, 3)));
    BinaryMatrix a = tile3({leaves[0], leaves[1], leaves[2]}, false);
    BinaryMatrix b = tile3({leaves[3], leaves[4], leaves[5]}, true);
    BinaryMatrix y(18, 18);
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 9; ++c) {
            if (a.get(r, c)) { y.set(r, c, 1); y.set(9 + r, 9 + c, 1); }
            if (b.get(r, c)) { y.set(r, 9 + c, 1); y.set(9 + r, c, 1); }
        }
    return y;
}

}  // namespace

GroupMatrixRingElement assemble_element(const ConstructionSpec& s, const Bits& bits) {
    if (bits.size() != s.bit_budget)
        throw std::invalid_argument("assemble_element: bit-budget mismatch");
    GroupMatrixRingElement v = gmr_zero(s.group, s.k);
    if (s.assembly == Assembly::DoubleBlock) {
        v.coeffs[0] = double_block_coefficient(s, bits, 0);
        v.coeffs[1] = double_block_coefficient(s, bits, 6);
        return v;
    }
    std::size_t off = 0;
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
        Bits b = slice(bits, off, s.blocks[i].arity);
        if (s.swap_circulant_pairs && s.blocks[i].shape == BlockShape::Circulant &&
            b.size() == 2)
            std::swap(b[0], b[1]);
        v.coeffs[i] = build_block(s.blocks[i], b);
        off += s.blocks[i].arity;
    }
    return v;
}

BinaryMatrix build_tau(const ConstructionSpec& s, const Bits& bits) {
    return sigma_tau(assemble_element(s, bits));
}

LinearCode build_generator(const ConstructionSpec& s, const Bits& bits) {
    BinaryMatrix tau = build_tau(s, bits);
    return code_from_rows(concat_horizontal(BinaryMatrix::identity(tau.rows()), tau));
}

namespace {

ConstructionSpec make_c2_spec(const std::string& name, BlockShape first_half,
                              BlockShape second_half) {
    ConstructionSpec s;
    s.name = name;
    s.group = cyclic_group(2);
    s.k = 18;
    s.assembly = Assembly::DoubleBlock;
    for (std::size_t t = 0; t < 12; ++t)
        s.blocks.push_back({t < 6 ? first_half : second_half, 3, 3});
    s.bit_budget = 36;
    s.fields = {{"rY0", 18}, {"rY1", 18}};
    return s;
}

ConstructionSpec make_pair_spec(const std::string& name, FiniteGroup group) {
    ConstructionSpec s;
    s.name = name;
    s.group = std::move(group);
    s.k = 2;
    for (std::size_t i = 0; i < 18; ++i)
        s.blocks.push_back({BlockShape::Circulant, 2, 2});
    s.bit_budget = 36;
    return s;
}

ConstructionSpec make_mixed_spec(const std::string& name, FiniteGroup group) {
    ConstructionSpec s;
    s.name = name;
    s.group = std::move(group);
    s.k = 2;
    for (std::size_t i = 0; i < 9; ++i)
        s.blocks.push_back({BlockShape::Persymmetric2, 2, 3});
    for (std::size_t i = 0; i < 9; ++i)
        s.blocks.push_back({BlockShape::Circulant, 2, 2});
    s.bit_budget = 45;
    return s;
}

std::vector<ConstructionSpec> make_registry() {
    std::vector<ConstructionSpec> specs;

    specs.push_back(make_c2_spec("C2_18_CASE1", BlockShape::ReverseCirculant,
                                 BlockShape::ReverseCirculant));
    specs.push_back(make_c2_spec("C2_18_CASE2", BlockShape::ReverseCirculant,
                                 BlockShape::Circulant));
    specs.push_back(make_c2_spec("C2_18_CASE3", BlockShape::Circulant,
                                 BlockShape::ReverseCirculant));

    ConstructionSpec d1 = make_pair_spec("D18_2_CASE1", dihedral_group(9));
    d1.fields = {{"rA", 18}, {"rB", 18}};
    specs.push_back(std::move(d1));

    ConstructionSpec d2 = make_mixed_spec("D18_2_CASE2", dihedral_group(9));
    d2.swap_circulant_pairs = true;
    for (std::size_t i = 1; i <= 9; ++i)
        d2.fields.emplace_back("rA" + std::to_string(i), 3);
    d2.fields.emplace_back("rB", 18);
    specs.push_back(std::move(d2));

    ConstructionSpec s1 = make_pair_spec("C63_2_CASE1", cyclic_split_group(6, 3));
    s1.fields = {{"rA", 12}, {"rB", 12}, {"rC", 12}};
    specs.push_back(std::move(s1));

    ConstructionSpec s2 = make_mixed_spec("C63_2_CASE2", cyclic_split_group(6, 3));
    for (std::size_t i = 1; i <= 9; ++i)
        s2.fields.emplace_back("rA" + std::to_string(i), 3);
    for (std::size_t i = 10; i <= 18; ++i)
        s2.fields.emplace_back("rA" + std::to_string(i), 2);
    specs.push_back(std::move(s2));

    return specs;
}

std::string normalize_field_name(const std::string& name) {
    std::string out;
    for (char ch : name)
        if (ch != '_' && ch != '{' && ch != '}') out.push_back(ch);
    return out;
}

}  // namespace

const std::vector<ConstructionSpec>& registered_specs() {
    static const std::vector<ConstructionSpec> specs = make_registry();
    return specs;
}

const ConstructionSpec* find_spec(const std::string& name) {
    for (const ConstructionSpec& s : registered_specs())
        if (s.name == name) return &s;
    return nullptr;
}

Bits decode_table_row(const ConstructionSpec& s,
                      const std::map<std::string, std::string>& fields) {
    std::map<std::string, std::string> seen;
    for (const auto& [name, value] : fields) {
        std::string key = normalize_field_name(name);
        if (!seen.emplace(key, value).second)
            throw std::invalid_argument("decode_table_row: duplicate field " + name);
    }
    Bits bits;
    bits.reserve(s.bit_budget);
    for (const auto& [name, count] : s.fields) {
        auto it = seen.find(name);
        if (it == seen.end())
            throw std::invalid_argument("decode_table_row: missing field " + name);
        const std::string& v = it->second;
        if (v.size() != count)
            throw std::invalid_argument("decode_table_row: field " + name + " needs " +
                                        std::to_string(count) + " bits");
        for (char ch : v) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("decode_table_row: field " + name +
                                            " has a non-bit character");
            bits.push_back(ch == '1');
        }
        seen.erase(it);
    }
    if (!seen.empty())
        throw std::invalid_argument("decode_table_row: unknown field " +
                                    seen.begin()->first);
    return bits;
}

std::vector<std::pair<std::string, std::string>> encode_table_row(
    const ConstructionSpec& s, const Bits& bits) {
    if (bits.size() != s.bit_budget)
        throw std::invalid_argument("encode_table_row: bit-budget mismatch");
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t off = 0;
    for (const auto& [name, count] : s.fields) {
        std::string v;
        for (std::size_t i = 0; i < count; ++i) v.push_back(bits[off + i] ? '1' : '0');
        out.emplace_back(name, std::move(v));
        off += count;
    }
    return out;
}

Bits parse_bits(const std::string& text, std::size_t expected) {
    if (text.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) + " bits");
    Bits bits;
    bits.reserve(expected);
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("bit string has a non-bit character");
        bits.push_back(ch == '1');
    }
    return bits;
}

std::string bits_to_string(const Bits& bits) {
    std::string out;
    out.reserve(bits.size());
    for (std::uint8_t b : bits) out.push_back(b ? '1' : '0');
    return out;
}

std::string bits_to_hex(const Bits& bits) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    std::size_t nbytes = (bits.size() + 7) / 8;
    for (std::size_t b = 0; b < nbytes; ++b) {
        unsigned byte = 0;
        for (std::size_t j = 0; j < 8; ++j) {
            std::size_t i = 8 * b + j;
            if (i < bits.size() && bits[i]) byte |= 1u << j;
        }
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xf]);
    }
    return out;
}

Bits bits_from_hex(const std::string& hex, std::size_t count) {
    std::size_t nbytes = (count + 7) / 8;
    if (hex.size() != 2 * nbytes)
        throw std::invalid_argument("expected " + std::to_string(2 * nbytes) +
                                    " hex digits");
    auto nibble = [](char ch) -> int {
        if (ch >= '0' && ch <= '9') return ch - '0';
        if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
        if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
        return -1;
    };
    Bits bits(count, 0);
    for (std::size_t b = 0; b < nbytes; ++b) {
        int hi = nibble(hex[2 * b]);
        int lo = nibble(hex[2 * b + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit");
        unsigned byte = unsigned(hi) << 4 | unsigned(lo);
        for (std::size_t j = 0; j < 8; ++j) {
            std::size_t i = 8 * b + j;
            if (i < count)
                bits[i] = (byte >> j) & 1u;
            else if ((byte >> j) & 1u)
                throw std::invalid_argument("stray bits past the budget");
        }
    }
    return bits;
}

}  // namespace gmrc
