#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gmrc/binary_matrix.hpp"
#include "gmrc/finite_group.hpp"

namespace gmrc {

// v = A_{g_1} g_1 + ... + A_{g_n} g_n with k x k coefficients over GF(2).
struct GroupMatrixRingElement {
    FiniteGroup group;
    std::size_t k = 0;
    std::vector<BinaryMatrix> coeffs;  // coeffs[i-1] = A_{g_i}
};

GroupMatrixRingElement gmr_zero(const FiniteGroup& g, std::size_t k);
GroupMatrixRingElement gmr_identity(const FiniteGroup& g, std::size_t k);
bool gmr_equal(const GroupMatrixRingElement& v, const GroupMatrixRingElement& w);

GroupMatrixRingElement gmr_add(const GroupMatrixRingElement& v,
                               const GroupMatrixRingElement& w);

// v on the left; neither the group nor the coefficient ring commutes.
GroupMatrixRingElement gmr_mul(const GroupMatrixRingElement& v,
                               const GroupMatrixRingElement& w);

// The kn x kn matrix whose block (i,j) is A_{g_i^{-1} g_j}. The block view
// is sigma_k(v); the flat bit matrix is tau_k(v). One function serves both.
BinaryMatrix sigma_tau(const GroupMatrixRingElement& v);

// Canonical involution: the coefficient of g^{-1} in v* is A_g transposed,
// so that sigma_tau(involution(v)) = transpose(sigma_tau(v)) identically.
GroupMatrixRingElement involution(const GroupMatrixRingElement& v);

bool is_unit(const GroupMatrixRingElement& v);

// v * involution(v) equals the identity element; equivalently
// tau(v) * tau(v)^T = I.
bool is_unitary_unit(const GroupMatrixRingElement& v);

std::string gmr_serialize(const GroupMatrixRingElement& v);
GroupMatrixRingElement gmr_parse(const std::string& text);

}  // namespace gmrc
