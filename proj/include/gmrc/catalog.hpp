#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gmrc/binary_matrix.hpp"
#include "gmrc/group_matrix_ring.hpp"
#include "gmrc/linear_code.hpp"

namespace gmrc {

// One published [72,36,12] code: the construction case, its table row, and the
// expected classification. The partial spectrum is the A_12/A_14/A_16 triple
// implied by the enumerator parameters, kept explicit for direct comparison.
struct CatalogEntry {
    std::string name;  // C1 .. C20
    std::string spec;
    std::vector<std::pair<std::string, std::string>> fields;
    Classification72 expected;
    std::uint64_t a12 = 0;
    std::uint64_t a14 = 0;
    std::uint64_t a16 = 0;
};

// Raw JSON text of the embedded catalog (codes plus the length-16 example).
const std::string& catalog_json_text();

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* find_catalog_entry(const std::string& name);

// The worked [16,8,4] example over M_2(GF(2))D_8: the element v, the expected
// tau matrix, and the full weight spectrum of the row space of tau.
struct Example16 {
    GroupMatrixRingElement v;
    BinaryMatrix tau;
    std::vector<std::uint64_t> spectrum;  // A_w for w = 0..16
};
const Example16& example16();

}  // namespace gmrc
