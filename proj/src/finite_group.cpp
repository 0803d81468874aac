#include "gmrc/finite_group.hpp"

#include <stdexcept>

namespace gmrc {

static std::string power_label(const std::string& base, std::size_t e) {
    if (e == 0) return "e";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

static void fill_inverses(FiniteGroup& g) {
    g.inv_table.assign(g.order, 0);
    for (std::size_t i = 1; i <= g.order; ++i)
        for (std::size_t j = 1; j <= g.order; ++j)
            if (g.mul(i, j) == 1) g.inv_table[i - 1] = j;
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic_group: order 0");
    FiniteGroup g;
    g.name = "C" + std::to_string(n);
    g.order = n;
    g.mul_table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.mul_table[i * n + j] = 1 + (i + j) % n;
    for (std::size_t i = 0; i < n; ++i) g.labels.push_back(power_label("x", i));
    fill_inverses(g);
    return g;
}

FiniteGroup dihedral_group(std::size_t m) {
    if (m == 0) throw std::invalid_argument("dihedral_group: m = 0");
    std::size_t n = 2 * m;
    FiniteGroup g;
    g.name = "D" + std::to_string(n);
    g.order = n;
    g.mul_table.resize(n * n);
    auto pos = [m](std::size_t i, std::size_t j) { return 1 + i % m + m * j; };
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    // (x^a y^b)(x^c y^d): moving y^b across x^c inverts the power.
                    std::size_t i = b == 0 ? (a + c) % m : (a + m - c) % m;
                    std::size_t j = b == 0 ? d : 1 - d;
                    g.mul_table[(pos(a, b) - 1) * n + (pos(c, d) - 1)] = pos(i, j);
                }
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < m; ++i) {
            if (j == 0)
                g.labels.push_back(power_label("x", i));
            else
                g.labels.push_back(i == 0 ? "y" : power_label("x", i) + " y");
        }
    fill_inverses(g);
    return g;
}

FiniteGroup cyclic_split_group(std::size_t r, std::size_t s) {
    if (r == 0 || s == 0) throw std::invalid_argument("cyclic_split_group: order 0");
    std::size_t n = r * s;
    FiniteGroup g;
    g.name = "C" + std::to_string(r) + "_" + std::to_string(s);
    g.order = n;
    std::vector<std::size_t> pos_of_exp(n), exp_of_pos(n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            pos_of_exp[s * i + j] = 1 + i + r * j;
            exp_of_pos[i + r * j] = s * i + j;
        }
    g.mul_table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.mul_table[i * n + j] = pos_of_exp[(exp_of_pos[i] + exp_of_pos[j]) % n];
    for (std::size_t p = 0; p < n; ++p)
        g.labels.push_back(power_label("x", exp_of_pos[p]));
    fill_inverses(g);
    return g;
}

std::optional<std::string> validate_group(const FiniteGroup& g) {
    std::size_t n = g.order;
    if (n == 0) return "order is 0";
    if (g.mul_table.size() != n * n) return "mul table has wrong size";
    if (g.inv_table.size() != n) return "inverse table has wrong size";
    if (g.labels.size() != n) return "label list has wrong size";
    for (std::size_t v : g.mul_table)
        if (v < 1 || v > n) return "mul table entry out of range";
    for (std::size_t j = 1; j <= n; ++j) {
        if (g.mul(1, j) != j || g.mul(j, 1) != j)
            return "position 1 is not the identity";
    }
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<bool> seen_row(n + 1, false), seen_col(n + 1, false);
        for (std::size_t j = 1; j <= n; ++j) {
            if (seen_row[g.mul(i, j)]) return "row " + std::to_string(i) + " is not a permutation";
            seen_row[g.mul(i, j)] = true;
            if (seen_col[g.mul(j, i)]) return "column " + std::to_string(i) + " is not a permutation";
            seen_col[g.mul(j, i)] = true;
        }
    }
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t v = g.inv(i);
        if (v < 1 || v > n) return "inverse entry out of range";
        if (g.mul(i, v) != 1 || g.mul(v, i) != 1)
            return "inverse table wrong at position " + std::to_string(i);
    }
    if (n <= 64) {
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                for (std::size_t k = 1; k <= n; ++k)
                    if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
                        return "associativity fails at (" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k) + ")";
    }
    return std::nullopt;
}

static std::optional<std::size_t> parse_count(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return std::nullopt;
        v = v * 10 + std::size_t(ch - '0');
        if (v > 1000000) return std::nullopt;
    }
    return v;
}

std::optional<FiniteGroup> group_from_name(const std::string& name) {
    if (name.rfind("Csplit:", 0) == 0) {
        std::string rest = name.substr(7);
        auto comma = rest.find(',');
        if (comma == std::string::npos) return std::nullopt;
        auto r = parse_count(rest.substr(0, comma));
        auto s = parse_count(rest.substr(comma + 1));
        if (!r || !s || *r == 0 || *s == 0) return std::nullopt;
        return cyclic_split_group(*r, *s);
    }
    if (name.size() >= 2 && name[0] == 'C') {
        auto under = name.find('_');
        if (under != std::string::npos) {
            auto r = parse_count(name.substr(1, under - 1));
            auto s = parse_count(name.substr(under + 1));
            if (!r || !s || *r == 0 || *s == 0) return std::nullopt;
            return cyclic_split_group(*r, *s);
        }
        auto n = parse_count(name.substr(1));
        if (!n || *n == 0) return std::nullopt;
        return cyclic_group(*n);
    }
    if (name.size() >= 2 && name[0] == 'D') {
        auto n = parse_count(name.substr(1));
        if (!n || *n == 0 || *n % 2 != 0) return std::nullopt;
        return dihedral_group(*n / 2);
    }
    return std::nullopt;
}

}  // namespace gmrc
