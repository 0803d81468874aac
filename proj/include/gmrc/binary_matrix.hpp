#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gmrc {

// Dense matrix over GF(2). Rows are packed into 64-bit words so that row
// operations (XOR, popcount) run at word speed; bit j of a row lives in
// word j/64 at bit position j%64.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
          data_(rows * ((cols + 63) / 64), 0) {}

    static BinaryMatrix identity(std::size_t n);
    static BinaryMatrix from_text(const std::string& text);
    static BinaryMatrix from_hex(const std::string& text, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    int get(std::size_t r, std::size_t c) const {
        return int((data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u);
    }
    void set(std::size_t r, std::size_t c, int bit) {
        std::uint64_t m = std::uint64_t(1) << (c & 63);
        if (bit)
            data_[r * wpr_ + (c >> 6)] |= m;
        else
            data_[r * wpr_ + (c >> 6)] &= ~m;
    }

    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * wpr_; }
    std::uint64_t* row(std::size_t r) { return data_.data() + r * wpr_; }

    void xor_rows(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    std::size_t row_weight(std::size_t r) const;
    bool row_is_zero(std::size_t r) const;
    bool is_zero() const;

    bool operator==(const BinaryMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const BinaryMatrix& o) const { return !(*this == o); }

    // One line per row, characters '0'/'1', each row newline-terminated.
    std::string to_text() const;
    // Row bits packed little-endian into bytes (bit c goes to bit c%8 of
    // byte c/8), rendered as two lowercase hex digits per byte.
    std::string row_hex(std::size_t r) const;
    std::string to_hex() const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

struct RowReduceResult {
    BinaryMatrix rref;                 // same shape as the input
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;   // pivot column of row i, i < rank
};

BinaryMatrix mat_add(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix transpose(const BinaryMatrix& a);
RowReduceResult row_reduce(const BinaryMatrix& a);
std::optional<BinaryMatrix> inverse(const BinaryMatrix& a);
BinaryMatrix concat_horizontal(const BinaryMatrix& a, const BinaryMatrix& b);

}  // namespace gmrc
