#include "zmu/galois.hpp"
#include "zmu/error.hpp"
#include "zmu/scheme.hpp"

#include <doctest.h>

#include <vector>

using namespace zmu;

TEST_CASE("prime fields are arithmetic mod p") {
    const Field f = Field::build(7, 1);
    CHECK(f.q() == 7);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            CHECK(f.add(a, b) == (a + b) % 7);
            CHECK(f.mul(a, b) == (a * b) % 7);
            CHECK(f.sub(a, b) == mod_reduce(a - b, 7));
        }
    CHECK(f.generator() == 3);  // 2 has order 3, so 3 is the first generator
}

TEST_CASE("GF(4) tables by hand") {
    // Elements 0, 1, t=2, t+1=3 with t^2 = t+1.
    const Field f = Field::build(2, 2);
    CHECK(f.reduction_poly() == std::vector<int>{1, 1, 1});
    CHECK(f.generator() == 2);
    CHECK(f.add(2, 3) == 1);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.mul(3, 3) == 2);
    CHECK(f.neg(2) == 2);  // characteristic 2
}

TEST_CASE("GF(9) default polynomial and generator") {
    // t^2 + 1 is the lexicographically first irreducible; 2 and t=3 fall
    // short (orders 2 and 4), so 1+t=4 is the first generator.
    const Field f = Field::build(3, 2);
    CHECK(f.reduction_poly() == std::vector<int>{1, 0, 1});
    CHECK(f.generator() == 4);
    CHECK(f.mul(3, 3) == 2);  // t^2 = -1
    int power = 1;
    for (int e = 1; e < 8; ++e) {
        power = f.mul(power, 4);
        CHECK(power != 1);
    }
    CHECK(f.mul(power, 4) == 1);
}

TEST_CASE("field axioms hold in GF(8)") {
    const Field f = Field::build(2, 3);
    const int q = f.q();
    for (int a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        for (int b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (int c = 0; c < q; ++c) {
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            }
        }
    }
    // Every nonzero element is a generator power with matching dlog.
    for (int x = 1; x < q; ++x) {
        CHECK(f.generator_power(f.dlog(x)) == x);
        CHECK(f.dlog(f.generator_power(x)) == x % (q - 1));
    }
}

TEST_CASE("build rejects bad parameters") {
    CHECK_THROWS_AS(Field::build(4, 1), Error);                       // not prime
    CHECK_THROWS_AS(Field::build(2, 2, std::vector<int>{1, 0, 1}), Error);  // t^2+1 reducible mod 2
    CHECK_THROWS_AS(Field::build(7, 1, std::nullopt, 2), Error);      // 2 generates only half
}

TEST_CASE("quotient table is circulant in the exponent") {
    const Field f = Field::build(3, 2);
    const auto table = quotient_table(f);
    const int n = f.q() - 1;
    REQUIRE(static_cast<int>(table.size()) == n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CHECK(table[i][j] == f.generator_power(i - j));
            CHECK(table[i][j] == table[(i + 1) % n][(j + 1) % n]);
        }
    // Diagonal is constant 1 = y^0.
    for (int i = 0; i < n; ++i) CHECK(table[i][i] == 1);
}

TEST_CASE("difference table subtracts in canonical element order") {
    const Field f = Field::build(2, 2);
    const auto table = difference_table(f);
    REQUIRE(table.size() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(table[i][j] == f.sub(i, j));
    // Characteristic 2: difference = XOR of encodings.
    CHECK(table[2][3] == 1);
    CHECK(table[1][3] == 2);
}

TEST_CASE("position residues index the quotient table's first row") {
    const Field f = Field::build(2, 2);
    const auto table = quotient_table(f);
    for (int x = 1; x < f.q(); ++x) {
        const int pos = position_residue(f, x);
        CHECK(table[0][pos] == x);
    }
}

TEST_CASE("position scheme blow-up marks x in the difference table") {
    for (const auto& [p, nu] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        const Field f = Field::build(p, nu);
        const auto table = difference_table(f);
        for (int x = 1; x < f.q(); ++x) {
            const Scheme scheme = position_scheme(f, x);
            CHECK(scheme.modulus() == p);
            const BinaryMatrix b = blow_up(scheme);
            REQUIRE(b.rows() == f.q());
            for (int i = 0; i < f.q(); ++i)
                for (int j = 0; j < f.q(); ++j)
                    CHECK(b.get(i, j) == (table[i][j] == x));
        }
    }
}
