#include "zmu/residue_set.hpp"
#include "zmu/error.hpp"

#include <doctest.h>

#include <set>

using namespace zmu;

TEST_CASE("mod_reduce maps into [0, mu)") {
    CHECK(mod_reduce(7, 5) == 2);
    CHECK(mod_reduce(-1, 5) == 4);
    CHECK(mod_reduce(-10, 5) == 0);
    CHECK(mod_reduce(0, 1) == 0);
    CHECK(mod_reduce(-13, 7) == 1);
}

TEST_CASE("residue sets normalize and compare") {
    ResidueSet s(6, {7, 1, -5, 3});
    CHECK(s.modulus() == 6);
    CHECK(s.size() == 2);
    CHECK(s.contains(1));
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(5));
    CHECK(s == ResidueSet(6, {1, 3}));
    // to_string uses the scheme-file cell syntax.
    CHECK(s.to_string() == "1,3");
}

TEST_CASE("negation is an involution") {
    ResidueSet s(9, {0, 2, 5});
    CHECK(s.negated() == ResidueSet(9, {0, 7, 4}));
    CHECK(s.negated().negated() == s);
}

TEST_CASE("empty set behaves") {
    ResidueSet s(4, {});
    CHECK(s.empty());
    CHECK(s.negated() == s);
    CHECK(s.to_string() == "-");
}

TEST_CASE("invalid modulus rejected") {
    CHECK_THROWS_AS(ResidueSet(0, {}), Error);
    CHECK_THROWS_AS(ResidueSet(-3, {1}), Error);
}

namespace {

// Literal restatement of the definition: all k(k-1) ordered differences of
// distinct members are distinct and nonzero.
bool dds_oracle(const ResidueSet& s) {
    std::set<int> seen;
    const auto& m = s.members();
    for (int a : m)
        for (int b : m) {
            if (a == b) continue;
            const int d = mod_reduce(a - b, s.modulus());
            if (d == 0 || !seen.insert(d).second) return false;
        }
    return true;
}

} // namespace

TEST_CASE("dds_check agrees with the definition") {
    // Perfect difference set for the Fano plane: every residue covered once.
    ResidueSet fano(7, {0, 1, 3});
    const auto report = dds_check(fano);
    CHECK(report.is_dds);
    CHECK(report.covered.size() == 6);
    CHECK(report.deficiency == 0);
    CHECK(dds_oracle(fano));

    ResidueSet clash(7, {0, 1, 2});
    CHECK_FALSE(dds_check(clash).is_dds);
    CHECK_FALSE(dds_oracle(clash));

    // 2a = 0 collision: 5 - 0 = 0 - 5 mod 10.
    ResidueSet half(10, {0, 5});
    CHECK_FALSE(dds_check(half).is_dds);
    CHECK_FALSE(dds_oracle(half));

    ResidueSet base35(35, {0, 1, 8, 11, 13, 17});
    const auto r35 = dds_check(base35);
    CHECK(r35.is_dds);
    CHECK(r35.covered.size() == 30);
    CHECK(r35.deficiency == 4);
}

TEST_CASE("dds deficiency counts uncovered nonzero residues") {
    ResidueSet s(13, {0, 1, 3, 9});
    const auto report = dds_check(s);
    CHECK(report.is_dds);
    CHECK(report.covered.size() == 12);
    CHECK(report.deficiency == 0);
}
