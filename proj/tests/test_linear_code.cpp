#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmrc/catalog.hpp"
#include "gmrc/constructions.hpp"
#include "gmrc/linear_code.hpp"
#include "oracle.hpp"

using namespace gmrc;

namespace {

BinaryMatrix from_rows(const std::vector<std::string>& rows) {
    std::string text;
    for (const std::string& r : rows) {
        text += r;
        text += "\n";
    }
    return BinaryMatrix::from_text(text);
}

const std::vector<std::string> kExtendedHamming = {
    "10000111",
    "01001011",
    "00101101",
    "00011110",
};

LinearCode catalog_code(const std::string& name) {
    const CatalogEntry* e = find_catalog_entry(name);
    REQUIRE(e != nullptr);
    const ConstructionSpec* s = find_spec(e->spec);
    REQUIRE(s != nullptr);
    std::map<std::string, std::string> f(e->fields.begin(), e->fields.end());
    return build_generator(*s, decode_table_row(*s, f));
}

BinaryMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1) m.set(r, c, 1);
    return m;
}

}  // namespace

TEST_SUITE("linear_code") {

TEST_CASE("code_from_rows") {
    LinearCode full = code_from_rows(BinaryMatrix::identity(4));
    CHECK(full.length == 4);
    CHECK(full.rank == 4);
    CHECK(full.basis == BinaryMatrix::identity(4));
    CHECK(full.pivots == std::vector<std::size_t>{0, 1, 2, 3});

    CHECK(code_from_rows(BinaryMatrix(3, 5)).rank == 0);

    LinearCode ex = code_from_rows(example16().tau);
    CHECK(ex.length == 16);
    CHECK(ex.rank == 8);

    // duplicated generator rows add no rank
    BinaryMatrix twice = concat_horizontal(transpose(example16().tau),
                                           transpose(example16().tau));
    CHECK(code_from_rows(transpose(twice)).rank == 8);
}

TEST_CASE("dual") {
    CHECK(dual(code_from_rows(BinaryMatrix::identity(4))).rank == 0);
    CHECK(dual(code_from_rows(BinaryMatrix(1, 4))).rank == 4);

    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
        std::size_t n = 6 + rng() % 27;
        std::size_t rows = 1 + rng() % 12;
        LinearCode c = code_from_rows(random_matrix(rng, rows, n));
        LinearCode d = dual(c);
        CHECK(d.rank == n - c.rank);
        if (c.rank && d.rank)
            CHECK(mat_mul(d.basis, transpose(c.basis)).is_zero());
        CHECK(dual(d).basis == c.basis);
    }
}

TEST_CASE("self orthogonality and duality") {
    LinearCode rep2 = code_from_rows(from_rows({"11"}));
    CHECK(is_self_orthogonal(rep2));
    CHECK(is_self_dual(rep2));

    CHECK(!is_self_dual(code_from_rows(BinaryMatrix::identity(2))));
    CHECK(!is_self_orthogonal(code_from_rows(BinaryMatrix::identity(2))));

    LinearCode rep4 = code_from_rows(from_rows({"1111"}));
    CHECK(is_self_orthogonal(rep4));
    CHECK(!is_self_dual(rep4));  // rank 1, not 2

    CHECK(is_self_dual(code_from_rows(from_rows(kExtendedHamming))));
    CHECK(is_self_dual(code_from_rows(example16().tau)));
}

TEST_CASE("is_doubly_even") {
    CHECK(!is_doubly_even(code_from_rows(from_rows({"11"}))));
    CHECK(is_doubly_even(code_from_rows(from_rows(kExtendedHamming))));
    CHECK_THROWS_AS(is_doubly_even(code_from_rows(BinaryMatrix::identity(2))),
                    std::invalid_argument);
}

TEST_CASE("code_contains") {
    LinearCode ex = code_from_rows(example16().tau);
    for (std::size_t r = 0; r < 16; ++r) {
        BinaryMatrix word(1, 16);
        for (std::size_t c = 0; c < 16; ++c)
            if (example16().tau.get(r, c)) word.set(0, c, 1);
        CHECK(code_contains(ex, word));
    }
    CHECK(code_contains(ex, BinaryMatrix(1, 16)));
    BinaryMatrix e1(1, 16);
    e1.set(0, 0, 1);
    CHECK(!code_contains(ex, e1));  // minimum distance is 4
    CHECK_THROWS_AS(code_contains(ex, BinaryMatrix(1, 8)), std::invalid_argument);
    CHECK_THROWS_AS(code_contains(ex, BinaryMatrix(2, 16)), std::invalid_argument);
}

TEST_CASE("weights_upto small") {
    LinearCode rep2 = code_from_rows(from_rows({"11"}));
    WeightProfile p = weights_upto(rep2, 2);
    CHECK(p.at(0) == 1);
    CHECK(p.at(1) == 0);
    CHECK(p.at(2) == 1);
    CHECK(p.at(3) == 0);  // beyond w_max reads as zero

    WeightProfile zero = weights_upto(code_from_rows(BinaryMatrix(1, 6)), 6);
    for (std::size_t w = 1; w <= 6; ++w) CHECK(zero.at(w) == 0);
    CHECK(zero.at(0) == 1);
}

TEST_CASE("weights_upto matches the worked example spectrum") {
    LinearCode ex = code_from_rows(example16().tau);
    WeightProfile p = weights_upto(ex, 16);
    for (std::size_t w = 0; w <= 16; ++w) CHECK(p.at(w) == example16().spectrum[w]);
}

TEST_CASE("weights_upto against the reference enumeration") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 10; ++t) {
        std::size_t n = 8 + rng() % 17;
        std::size_t rows = 2 + rng() % 9;
        LinearCode c = code_from_rows(random_matrix(rng, rows, n));
        auto ref = refimpl::ref_weight_counts(refimpl::to_int_rows(c.gen));
        WeightProfile p = weights_upto(c, n);
        for (std::size_t w = 0; w <= n; ++w) CHECK(p.at(w) == ref[w]);
        WeightProfile half = weights_upto(c, n / 2);
        for (std::size_t w = 0; w <= n / 2; ++w) CHECK(half.at(w) == ref[w]);
    }
}

TEST_CASE("weights_upto on a [72,36] construction") {
    LinearCode c1 = catalog_code("C1");
    WeightProfile p = weights_upto(c1, 16);
    CHECK(p.at(0) == 1);
    for (std::size_t w = 1; w <= 11; ++w) CHECK(p.at(w) == 0);
    CHECK(p.at(12) == 1086);
    CHECK(p.at(13) == 0);
    CHECK(p.at(14) == 6336);
    CHECK(p.at(15) == 0);
    CHECK(p.at(16) == 125073);

    Classification72 cls = classify_72(c1, p);
    CHECK(cls.kind == Kind72::TypeI_W1);
    CHECK(cls.gamma == 36);
    CHECK(cls.beta == 543);
}

TEST_CASE("min_distance") {
    CHECK(min_distance(code_from_rows(from_rows({"11"}))) == 2);
    CHECK(min_distance(code_from_rows(from_rows(kExtendedHamming))) == 4);
    CHECK(min_distance(code_from_rows(example16().tau)) == 4);
    CHECK_THROWS_AS(min_distance(code_from_rows(BinaryMatrix(1, 4))),
                    std::invalid_argument);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 6; ++t) {
        std::size_t n = 8 + rng() % 13;
        LinearCode c = code_from_rows(random_matrix(rng, 1 + rng() % 6, n));
        if (c.rank == 0) continue;
        auto ref = refimpl::ref_weight_counts(refimpl::to_int_rows(c.gen));
        std::size_t expect = 1;
        while (ref[expect] == 0) ++expect;
        CHECK(min_distance(c) == expect);
    }

    CHECK(min_distance(catalog_code("C1")) == 12);
}

TEST_CASE("classify_72 on published codes") {
    Classification72 c2 = classify_72(catalog_code("C2"));
    CHECK(c2.kind == Kind72::TypeII);
    CHECK(c2.alpha == -2604);

    Classification72 c17 = classify_72(catalog_code("C17"));
    CHECK(c17.kind == Kind72::TypeI_W1);
    CHECK(c17.gamma == 27);
    CHECK(c17.beta == 345);
}

TEST_CASE("classify_72 validation") {
    CHECK_THROWS_AS(classify_72(code_from_rows(from_rows({"11"}))),
                    std::invalid_argument);

    LinearCode c1 = catalog_code("C1");
    WeightProfile shallow;
    shallow.w_max = 12;
    shallow.counts.assign(13, 0);
    CHECK_THROWS_AS(classify_72(c1, shallow), std::invalid_argument);

    // the second singly-even shape, on a spectrum built from its equations
    WeightProfile w2;
    w2.w_max = 16;
    w2.counts.assign(17, 0);
    w2.counts[0] = 1;
    w2.counts[12] = 200;    // beta = 100
    w2.counts[14] = 7296;   // gamma = 5
    w2.counts[16] = 134041;
    Classification72 cls = classify_72(c1, w2);
    CHECK(cls.kind == Kind72::TypeI_W2);
    CHECK(cls.gamma == 5);
    CHECK(cls.beta == 100);

    // no enumerator shape fits this spectrum
    WeightProfile bad = w2;
    bad.counts[14] = 7297;
    CHECK_THROWS_AS(classify_72(c1, bad), std::runtime_error);
}

TEST_CASE("is_extremal") {
    CHECK(is_extremal(72, 16, SelfDualKind::TypeII));
    CHECK(!is_extremal(72, 12, SelfDualKind::TypeII));
    CHECK(!is_extremal(72, 12, SelfDualKind::TypeI));
    CHECK(is_extremal(16, 4, SelfDualKind::TypeI));
    CHECK(is_extremal(22, 6, SelfDualKind::TypeI));
    CHECK(!is_extremal(22, 6, SelfDualKind::TypeII));
    CHECK(is_extremal(24, 8, SelfDualKind::TypeII));
    CHECK_THROWS_AS(is_extremal(7, 2, SelfDualKind::TypeI), std::invalid_argument);
}

TEST_CASE("quasi_group_invariant") {
    FiniteGroup d8 = dihedral_group(4);
    CHECK(quasi_group_invariant(code_from_rows(example16().tau), d8, 2));
    CHECK(quasi_group_invariant(code_from_rows(BinaryMatrix::identity(16)), d8, 2));

    BinaryMatrix e1(1, 16);
    e1.set(0, 0, 1);
    CHECK(!quasi_group_invariant(code_from_rows(e1), d8, 2));

    CHECK_THROWS_AS(quasi_group_invariant(code_from_rows(from_rows({"11"})), d8, 2),
                    std::invalid_argument);
}

TEST_CASE("kind names") {
    CHECK(kind_to_string(Kind72::TypeI_W1) == "TypeI-W1");
    CHECK(kind_to_string(Kind72::TypeI_W2) == "TypeI-W2");
    CHECK(kind_to_string(Kind72::TypeII) == "TypeII");
    for (Kind72 k : {Kind72::TypeI_W1, Kind72::TypeI_W2, Kind72::TypeII})
        CHECK(kind_from_string(kind_to_string(k)) == k);
    CHECK_THROWS_AS(kind_from_string("TypeIII"), std::invalid_argument);
}

TEST_CASE("text rendering") {
    LinearCode rep2 = code_from_rows(from_rows({"11"}));
    CHECK(profile_text(weights_upto(rep2, 2)) == "w_max=2\nA_0=1\nA_2=1\n");

    Classification72 w1;
    w1.kind = Kind72::TypeI_W1;
    w1.gamma = 36;
    w1.beta = 543;
    CHECK(classification_text(w1) == "kind=TypeI-W1\ngamma=36\nbeta=543\n");

    Classification72 t2;
    t2.kind = Kind72::TypeII;
    t2.alpha = -2604;
    CHECK(classification_text(t2) == "kind=TypeII\nalpha=-2604\n");
}

}
