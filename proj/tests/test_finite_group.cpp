#include <doctest.h>

#include <set>
#include <stdexcept>

#include "gmrc/finite_group.hpp"

using namespace gmrc;

TEST_SUITE("finite_group") {

TEST_CASE("cyclic groups") {
    FiniteGroup c2 = cyclic_group(2);
    CHECK(c2.name == "C2");
    CHECK(c2.order == 2);
    CHECK(c2.mul_table == std::vector<std::size_t>{1, 2, 2, 1});
    FiniteGroup c3 = cyclic_group(3);
    CHECK(c3.inv(2) == 3);
    CHECK(c3.label(1) == "e");
    CHECK(c3.label(2) == "x");
    CHECK(c3.label(3) == "x^2");
    CHECK(!validate_group(cyclic_group(18)).has_value());
    CHECK_THROWS_AS(cyclic_group(0), std::invalid_argument);
}

TEST_CASE("dihedral groups") {
    FiniteGroup d8 = dihedral_group(4);
    CHECK(d8.name == "D8");
    CHECK(d8.order == 8);
    // reflections x^i y sit at positions 5..8 and are involutions
    for (std::size_t p = 5; p <= 8; ++p) CHECK(d8.inv(p) == p);
    FiniteGroup d18 = dihedral_group(9);
    CHECK(d18.order == 18);
    CHECK(d18.inv(2) == 9);  // x -> x^8
    // y x = x^8 y in table form
    CHECK(d18.mul(10, 2) == 18);
    CHECK(!validate_group(d18).has_value());
    CHECK(!validate_group(d8).has_value());
    CHECK_THROWS_AS(dihedral_group(0), std::invalid_argument);
}

TEST_CASE("cyclic split listing") {
    FiniteGroup g = cyclic_split_group(6, 3);
    CHECK(g.order == 18);
    CHECK(g.label(1) == "e");
    CHECK(g.label(2) == "x^3");
    CHECK(g.label(7) == "x");
    std::set<std::string> labels(g.labels.begin(), g.labels.end());
    CHECK(labels.size() == 18);
    CHECK(!validate_group(g).has_value());

    FiniteGroup plain = cyclic_group(5);
    FiniteGroup split = cyclic_split_group(5, 1);
    CHECK(split.order == plain.order);
    CHECK(split.mul_table == plain.mul_table);
    CHECK(split.labels == plain.labels);
}

TEST_CASE("validate_group catches corruption") {
    CHECK(!validate_group(cyclic_group(5)).has_value());
    FiniteGroup bad = cyclic_group(2);
    bad.mul_table[3] = 2;  // mul(2,2) = 2 breaks the Latin square
    auto violation = validate_group(bad);
    REQUIRE(violation.has_value());
    CHECK(!violation->empty());

    FiniteGroup shifted = cyclic_group(3);
    shifted.inv_table[1] = 2;
    CHECK(validate_group(shifted).has_value());
}

TEST_CASE("inverse of a product") {
    for (const FiniteGroup& g :
         {cyclic_group(6), dihedral_group(4), dihedral_group(9),
          cyclic_split_group(6, 3)}) {
        for (std::size_t i = 1; i <= g.order; ++i) {
            CHECK(g.mul(i, g.inv(i)) == 1);
            CHECK(g.mul(g.inv(i), i) == 1);
            CHECK(g.mul(1, i) == i);
            CHECK(g.mul(i, 1) == i);
            for (std::size_t j = 1; j <= g.order; ++j)
                CHECK(g.inv(g.mul(i, j)) == g.mul(g.inv(j), g.inv(i)));
        }
    }
}

TEST_CASE("group_from_name") {
    auto c2 = group_from_name("C2");
    REQUIRE(c2.has_value());
    CHECK(c2->order == 2);
    CHECK(group_from_name("C18")->order == 18);
    CHECK(group_from_name("D8")->order == 8);
    CHECK(group_from_name("D18")->order == 18);
    auto c63 = group_from_name("C6_3");
    REQUIRE(c63.has_value());
    CHECK(c63->order == 18);
    CHECK(c63->label(2) == "x^3");
    auto split = group_from_name("Csplit:6,3");
    REQUIRE(split.has_value());
    CHECK(split->mul_table == c63->mul_table);
    CHECK(!group_from_name("D7").has_value());
    CHECK(!group_from_name("E8").has_value());
    CHECK(!group_from_name("C0").has_value());
    CHECK(!group_from_name("").has_value());
}

}
