#pragma once

// Hand-tiled tau matrices following the displayed block shape of each
// construction family, written with plain loops and local block builders so
// the comparison against the general sigma_tau path is a real cross-check.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmrc/binary_matrix.hpp"
#include "gmrc/constructions.hpp"

namespace direct {

using gmrc::BinaryMatrix;
using gmrc::Bits;

inline BinaryMatrix circ(const std::vector<int>& a) {
    std::size_t k = a.size();
    BinaryMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (a[(j + k - i) % k]) m.set(i, j, 1);
    return m;
}

inline BinaryMatrix revcirc(const std::vector<int>& a) {
    std::size_t k = a.size();
    BinaryMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (a[(i + j) % k]) m.set(i, j, 1);
    return m;
}

inline BinaryMatrix persym2(int a1, int a2, int a3) {
    BinaryMatrix m(2, 2);
    if (a1) { m.set(0, 0, 1); m.set(1, 1, 1); }
    if (a2) m.set(0, 1, 1);
    if (a3) m.set(1, 0, 1);
    return m;
}

inline void paste(BinaryMatrix& dst, const BinaryMatrix& src, std::size_t r0,
                  std::size_t c0) {
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c)
            if (src.get(r, c)) dst.set(r0 + r, c0 + c, 1);
}

inline std::vector<int> slice3(const Bits& bits, std::size_t t) {
    return {int(bits[3 * t]), int(bits[3 * t + 1]), int(bits[3 * t + 2])};
}

// One coefficient of the C2-18x18 frame: Y = [[A,B],[B,A]] where A runs the
// first three leaves around a block-circulant 3x3 grid and B runs the last
// three around a block-Hankel grid.
inline BinaryMatrix c2_coefficient(const Bits& bits, std::size_t first_leaf,
                                   bool leaves_rev) {
    std::vector<BinaryMatrix> leaf;
    for (std::size_t t = 0; t < 6; ++t) {
        std::vector<int> a = slice3(bits, first_leaf + t);
        leaf.push_back(leaves_rev ? revcirc(a) : circ(a));
    }
    BinaryMatrix a9(9, 9), b9(9, 9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            paste(a9, leaf[(j + 3 - i) % 3], 3 * i, 3 * j);
            paste(b9, leaf[3 + (i + j) % 3], 3 * i, 3 * j);
        }
    BinaryMatrix y(18, 18);
    paste(y, a9, 0, 0);
    paste(y, a9, 9, 9);
    paste(y, b9, 0, 9);
    paste(y, b9, 9, 0);
    return y;
}

inline BinaryMatrix tau_c2_18(const Bits& bits, bool first_rev, bool second_rev) {
    BinaryMatrix y0 = c2_coefficient(bits, 0, first_rev);
    BinaryMatrix y1 = c2_coefficient(bits, 6, second_rev);
    BinaryMatrix tau(36, 36);
    paste(tau, y0, 0, 0);
    paste(tau, y0, 18, 18);
    paste(tau, y1, 0, 18);
    paste(tau, y1, 18, 0);
    return tau;
}

// Quadrants over the eighteen 2x2 blocks m[0..17] (rotations then
// reflections): TL(a,b) = m[(b-a)%9], TR(a,b) = m[9+(b-a)%9],
// BL(a,b) = m[9+(a-b)%9], BR(a,b) = m[(a-b)%9].
inline BinaryMatrix tau_d18_2(const std::vector<BinaryMatrix>& m) {
    BinaryMatrix tau(36, 36);
    for (std::size_t a = 0; a < 9; ++a)
        for (std::size_t b = 0; b < 9; ++b) {
            paste(tau, m[(b + 9 - a) % 9], 2 * a, 2 * b);
            paste(tau, m[9 + (b + 9 - a) % 9], 2 * a, 18 + 2 * b);
            paste(tau, m[9 + (a + 9 - b) % 9], 18 + 2 * a, 2 * b);
            paste(tau, m[(a + 9 - b) % 9], 18 + 2 * a, 18 + 2 * b);
        }
    return tau;
}

inline BinaryMatrix tau_d18_case1(const Bits& bits) {
    std::vector<BinaryMatrix> m;
    for (std::size_t i = 0; i < 18; ++i)
        m.push_back(circ({int(bits[2 * i]), int(bits[2 * i + 1])}));
    return tau_d18_2(m);
}

inline BinaryMatrix tau_d18_case2(const Bits& bits) {
    std::vector<BinaryMatrix> m;
    for (std::size_t i = 0; i < 9; ++i)
        m.push_back(persym2(bits[3 * i], bits[3 * i + 1], bits[3 * i + 2]));
    // the circulant pairs read their first row right-to-left in this layout
    for (std::size_t i = 0; i < 9; ++i)
        m.push_back(circ({int(bits[27 + 2 * i + 1]), int(bits[27 + 2 * i])}));
    return tau_d18_2(m);
}

// 6x6 grid of 2x2 blocks, block(i,j) = m[(j-i)%6].
inline BinaryMatrix block_circ6(const std::vector<BinaryMatrix>& m) {
    BinaryMatrix out(12, 12);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) paste(out, m[(j + 6 - i) % 6], 2 * i, 2 * j);
    return out;
}

// Grid [[A,B,C],[C',A,B],[B',C',A]] with A over m[0..5], B over m[6..11],
// C over m[12..17], B' = block_circ6(m[11], m[6..10]), C' = block_circ6(m[17],
// m[12..16]).
inline BinaryMatrix tau_c63_2(const std::vector<BinaryMatrix>& m) {
    auto seg = [&m](std::size_t from, bool primed) {
        std::vector<BinaryMatrix> part;
        if (primed) part.push_back(m[from + 5]);
        for (std::size_t i = 0; i < (primed ? 5u : 6u); ++i) part.push_back(m[from + i]);
        return block_circ6(part);
    };
    BinaryMatrix a = seg(0, false), b = seg(6, false), c = seg(12, false);
    BinaryMatrix bp = seg(6, true), cp = seg(12, true);
    BinaryMatrix tau(36, 36);
    const BinaryMatrix* grid[3][3] = {{&a, &b, &c}, {&cp, &a, &b}, {&bp, &cp, &a}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) paste(tau, *grid[i][j], 12 * i, 12 * j);
    return tau;
}

inline BinaryMatrix tau_c63_case1(const Bits& bits) {
    std::vector<BinaryMatrix> m;
    for (std::size_t i = 0; i < 18; ++i)
        m.push_back(circ({int(bits[2 * i]), int(bits[2 * i + 1])}));
    return tau_c63_2(m);
}

inline BinaryMatrix tau_c63_case2(const Bits& bits) {
    std::vector<BinaryMatrix> m;
    for (std::size_t i = 0; i < 9; ++i)
        m.push_back(persym2(bits[3 * i], bits[3 * i + 1], bits[3 * i + 2]));
    for (std::size_t i = 0; i < 9; ++i)
        m.push_back(circ({int(bits[27 + 2 * i]), int(bits[27 + 2 * i + 1])}));
    return tau_c63_2(m);
}

inline BinaryMatrix direct_tau(const std::string& spec_name, const Bits& bits) {
    if (spec_name == "C2_18_CASE1") return tau_c2_18(bits, true, true);
    if (spec_name == "C2_18_CASE2") return tau_c2_18(bits, true, false);
    if (spec_name == "C2_18_CASE3") return tau_c2_18(bits, false, true);
    if (spec_name == "D18_2_CASE1") return tau_d18_case1(bits);
    if (spec_name == "D18_2_CASE2") return tau_d18_case2(bits);
    if (spec_name == "C63_2_CASE1") return tau_c63_case1(bits);
    if (spec_name == "C63_2_CASE2") return tau_c63_case2(bits);
    throw std::invalid_argument("direct_tau: unknown spec " + spec_name);
}

}  // namespace direct
