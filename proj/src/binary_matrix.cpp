#include "gmrc/binary_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace gmrc {

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

BinaryMatrix BinaryMatrix::from_text(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() &&
               (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && (line[start] == ' ' || line[start] == '\t'))
            ++start;
        if (start) line.erase(0, start);
        if (line.empty()) continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("matrix text: no rows");
    std::size_t cols = lines[0].size();
    BinaryMatrix m(lines.size(), cols);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (lines[r].size() != cols)
            throw std::invalid_argument("matrix text: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            char ch = lines[r][c];
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("matrix text: invalid character");
            if (ch == '1') m.set(r, c, 1);
        }
    }
    return m;
}

static int hex_nibble(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
}

BinaryMatrix BinaryMatrix::from_hex(const std::string& text, std::size_t cols) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() &&
               (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && (line[start] == ' ' || line[start] == '\t'))
            ++start;
        if (start) line.erase(0, start);
        if (line.empty()) continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("matrix hex: no rows");
    std::size_t nbytes = (cols + 7) / 8;
    BinaryMatrix m(lines.size(), cols);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (lines[r].size() != 2 * nbytes)
            throw std::invalid_argument("matrix hex: wrong row length");
        for (std::size_t b = 0; b < nbytes; ++b) {
            int hi = hex_nibble(lines[r][2 * b]);
            int lo = hex_nibble(lines[r][2 * b + 1]);
            if (hi < 0 || lo < 0)
                throw std::invalid_argument("matrix hex: invalid digit");
            unsigned byte = unsigned(hi) << 4 | unsigned(lo);
            for (int j = 0; j < 8; ++j) {
                std::size_t c = 8 * b + std::size_t(j);
                if (c >= cols) {
                    if ((byte >> j) & 1u)
                        throw std::invalid_argument("matrix hex: stray bits past width");
                    continue;
                }
                if ((byte >> j) & 1u) m.set(r, c, 1);
            }
        }
    }
    return m;
}

void BinaryMatrix::xor_rows(std::size_t dst, std::size_t src) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* pa = row(a);
    std::uint64_t* pb = row(b);
    for (std::size_t w = 0; w < wpr_; ++w) std::swap(pa[w], pb[w]);
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const {
    std::size_t n = 0;
    const std::uint64_t* p = row(r);
    for (std::size_t w = 0; w < wpr_; ++w) n += std::size_t(std::popcount(p[w]));
    return n;
}

bool BinaryMatrix::row_is_zero(std::size_t r) const {
    const std::uint64_t* p = row(r);
    for (std::size_t w = 0; w < wpr_; ++w)
        if (p[w]) return false;
    return true;
}

bool BinaryMatrix::is_zero() const {
    for (std::uint64_t w : data_)
        if (w) return false;
    return true;
}

std::string BinaryMatrix::to_text() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            out.push_back(get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

std::string BinaryMatrix::row_hex(std::size_t r) const {
    static const char* digits = "0123456789abcdef";
    std::size_t nbytes = (cols_ + 7) / 8;
    std::string out;
    out.reserve(2 * nbytes);
    for (std::size_t b = 0; b < nbytes; ++b) {
        unsigned byte = 0;
        for (int j = 0; j < 8; ++j) {
            std::size_t c = 8 * b + std::size_t(j);
            if (c < cols_ && get(r, c)) byte |= 1u << j;
        }
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xf]);
    }
    return out;
}

std::string BinaryMatrix::to_hex() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        out += row_hex(r);
        out.push_back('\n');
    }
    return out;
}

BinaryMatrix mat_add(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("mat_add: dimension mismatch");
    BinaryMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::uint64_t* d = out.row(r);
        const std::uint64_t* s = b.row(r);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) d[w] ^= s[w];
    }
    return out;
}

BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    BinaryMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::uint64_t* dst = out.row(r);
        const std::uint64_t* src = a.row(r);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) {
            std::uint64_t bits = src[w];
            while (bits) {
                std::size_t j = 64 * w + std::size_t(std::countr_zero(bits));
                bits &= bits - 1;
                const std::uint64_t* brow = b.row(j);
                for (std::size_t t = 0; t < b.words_per_row(); ++t) dst[t] ^= brow[t];
            }
        }
    }
    return out;
}

BinaryMatrix transpose(const BinaryMatrix& a) {
    BinaryMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const std::uint64_t* src = a.row(r);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) {
            std::uint64_t bits = src[w];
            while (bits) {
                std::size_t c = 64 * w + std::size_t(std::countr_zero(bits));
                bits &= bits - 1;
                out.set(c, r, 1);
            }
        }
    }
    return out;
}

RowReduceResult row_reduce(const BinaryMatrix& a) {
    RowReduceResult res;
    res.rref = a;
    BinaryMatrix& m = res.rref;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i) {
            if (m.get(i, c)) { piv = i; break; }
        }
        if (piv == a.rows()) continue;
        m.swap_rows(r, piv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i != r && m.get(i, c)) m.xor_rows(i, r);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::optional<BinaryMatrix> inverse(const BinaryMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("inverse: non-square input");
    std::size_t n = a.rows();
    RowReduceResult red = row_reduce(concat_horizontal(a, BinaryMatrix::identity(n)));
    // [a | I] always has rank n; a is invertible exactly when the pivots all
    // land in the left half.
    for (std::size_t r = 0; r < n; ++r)
        if (r >= red.pivots.size() || red.pivots[r] != r) return std::nullopt;
    BinaryMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (red.rref.get(r, n + c)) out.set(r, c, 1);
    return out;
}

BinaryMatrix concat_horizontal(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("concat_horizontal: row-count mismatch");
    BinaryMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) out.set(r, c, 1);
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (b.get(r, c)) out.set(r, a.cols() + c, 1);
    }
    return out;
}

}  // namespace gmrc
