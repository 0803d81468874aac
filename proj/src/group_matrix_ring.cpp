#include "gmrc/group_matrix_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace gmrc {

static void check_compatible(const GroupMatrixRingElement& v,
                             const GroupMatrixRingElement& w) {
    if (v.group.order != w.group.order || v.group.mul_table != w.group.mul_table)
        throw std::invalid_argument("group mismatch");
    if (v.k != w.k) throw std::invalid_argument("block size mismatch");
}

static void check_shape(const GroupMatrixRingElement& v) {
    if (v.coeffs.size() != v.group.order)
        throw std::invalid_argument("coefficient count != group order");
    for (const BinaryMatrix& a : v.coeffs)
        if (a.rows() != v.k || a.cols() != v.k)
            throw std::invalid_argument("coefficient is not k x k");
}

GroupMatrixRingElement gmr_zero(const FiniteGroup& g, std::size_t k) {
    GroupMatrixRingElement v;
    v.group = g;
    v.k = k;
    v.coeffs.assign(g.order, BinaryMatrix(k, k));
    return v;
}

GroupMatrixRingElement gmr_identity(const FiniteGroup& g, std::size_t k) {
    GroupMatrixRingElement v = gmr_zero(g, k);
    v.coeffs[0] = BinaryMatrix::identity(k);
    return v;
}

bool gmr_equal(const GroupMatrixRingElement& v, const GroupMatrixRingElement& w) {
    if (v.group.order != w.group.order || v.group.mul_table != w.group.mul_table ||
        v.k != w.k)
        return false;
    return v.coeffs == w.coeffs;
}

GroupMatrixRingElement gmr_add(const GroupMatrixRingElement& v,
                               const GroupMatrixRingElement& w) {
    check_compatible(v, w);
    check_shape(v);
    check_shape(w);
    GroupMatrixRingElement out = v;
    for (std::size_t i = 0; i < v.coeffs.size(); ++i)
        out.coeffs[i] = mat_add(v.coeffs[i], w.coeffs[i]);
    return out;
}

GroupMatrixRingElement gmr_mul(const GroupMatrixRingElement& v,
                               const GroupMatrixRingElement& w) {
    check_compatible(v, w);
    check_shape(v);
    check_shape(w);
    GroupMatrixRingElement out = gmr_zero(v.group, v.k);
    std::size_t n = v.group.order;
    for (std::size_t i = 1; i <= n; ++i) {
        if (v.coeffs[i - 1].is_zero()) continue;
        for (std::size_t j = 1; j <= n; ++j) {
            if (w.coeffs[j - 1].is_zero()) continue;
            std::size_t t = v.group.mul(i, j);
            out.coeffs[t - 1] =
                mat_add(out.coeffs[t - 1], mat_mul(v.coeffs[i - 1], w.coeffs[j - 1]));
        }
    }
    return out;
}

BinaryMatrix sigma_tau(const GroupMatrixRingElement& v) {
    check_shape(v);
    std::size_t n = v.group.order, k = v.k;
    BinaryMatrix out(n * k, n * k);
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t gi_inv = v.group.inv(i);
        for (std::size_t j = 1; j <= n; ++j) {
            const BinaryMatrix& a = v.coeffs[v.group.mul(gi_inv, j) - 1];
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c)
                    if (a.get(r, c)) out.set((i - 1) * k + r, (j - 1) * k + c, 1);
        }
    }
    return out;
}

GroupMatrixRingElement involution(const GroupMatrixRingElement& v) {
    check_shape(v);
    GroupMatrixRingElement out = gmr_zero(v.group, v.k);
    for (std::size_t i = 1; i <= v.group.order; ++i)
        out.coeffs[v.group.inv(i) - 1] = transpose(v.coeffs[i - 1]);
    return out;
}

bool is_unit(const GroupMatrixRingElement& v) {
    BinaryMatrix t = sigma_tau(v);
    return row_reduce(t).rank == t.rows();
}

bool is_unitary_unit(const GroupMatrixRingElement& v) {
    return gmr_equal(gmr_mul(v, involution(v)), gmr_identity(v.group, v.k));
}

std::string gmr_serialize(const GroupMatrixRingElement& v) {
    check_shape(v);
    std::ostringstream out;
    out << "group " << v.group.name << " k " << v.k << "\n";
    for (const BinaryMatrix& a : v.coeffs) {
        for (std::size_t r = 0; r < v.k; ++r) {
            if (r) out << ' ';
            out << a.row_hex(r);
        }
        out << "\n";
    }
    return out.str();
}

GroupMatrixRingElement gmr_parse(const std::string& text) {
    std::istringstream in(text);
    std::string kw1, name, kw2;
    std::size_t k = 0;
    if (!(in >> kw1 >> name >> kw2 >> k) || kw1 != "group" || kw2 != "k")
        throw std::invalid_argument("gmr_parse: bad header");
    auto g = group_from_name(name);
    if (!g) throw std::invalid_argument("gmr_parse: unknown group " + name);
    GroupMatrixRingElement v = gmr_zero(*g, k);
    for (std::size_t i = 0; i < g->order; ++i) {
        std::string rows;
        for (std::size_t r = 0; r < k; ++r) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("gmr_parse: truncated");
            rows += tok;
            rows += "\n";
        }
        v.coeffs[i] = BinaryMatrix::from_hex(rows, k);
    }
    return v;
}

}  // namespace gmrc
