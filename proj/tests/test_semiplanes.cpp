#include "zmu/semiplanes.hpp"
#include "zmu/catalog.hpp"
#include "zmu/error.hpp"
#include "zmu/galois.hpp"
#include "zmu/iso.hpp"

#include <doctest.h>

using namespace zmu;

TEST_CASE("construct_L shape and parameters") {
    for (int q : {3, 4, 5, 7}) {
        const Scheme s = construct_L(q);
        CHECK(s.modulus() == q - 1);
        CHECK(s.rows() == q + 1);
        CHECK(s.is_pure());
        const auto v = valency(s);
        REQUIRE(v.has_value());
        CHECK(*v == std::pair<int, int>(q, q));
        CHECK(is_j2_free_scheme(s).j2_free);

        const IncidenceStructure inc(blow_up(s));
        const auto params = config_params(inc);
        REQUIRE(params.has_value());
        CHECK(params->points == q * q - 1);
        CHECK(params->point_degree == q);
        CHECK(is_elliptic_semiplane(inc));
    }
}

TEST_CASE("construct_L border and diagonal") {
    const Scheme s = construct_L(5);
    const int n = s.rows();
    for (int i = 0; i < n - 1; ++i) {
        CHECK(s.is_blank(i, i));
        CHECK(s.set_at(i, n - 1) == ResidueSet(4, {0}));
        CHECK(s.set_at(n - 1, i) == ResidueSet(4, {0}));
    }
    CHECK(s.is_blank(n - 1, n - 1));
}

TEST_CASE("construct_L pinned cells for q = 7, generator 3") {
    // dlog base 3 mod 7: 3^0=1 3^1=3 3^2=2 3^3=6 3^4=4 3^5=5. With the minus
    // sign, entry (0,1) is {-dlog(x_0 - x_1)} = {-dlog(-1)} = {-3} = {3}.
    LOptions options;
    options.generator = 3;
    const Scheme s = construct_L(7, options);
    CHECK(s.set_at(0, 1) == ResidueSet(6, {3}));
    // (1,0): -dlog(1) = 0; the table is not skew-symmetric.
    CHECK(s.set_at(1, 0) == ResidueSet(6, {0}));
    // (1,2): x_1 - x_2 = -1 again; subdiagonals are constant.
    CHECK(s.set_at(1, 2) == ResidueSet(6, {3}));
    // (0,2): -dlog(-2) = -(dlog(2) + dlog(-1)) = -(2 + 3) = -5 = 1.
    CHECK(s.set_at(0, 2) == ResidueSet(6, {1}));
    CHECK(s == named("L6").scheme);
}

TEST_CASE("construct_L rejects bad q") {
    CHECK_THROWS_AS(construct_L(2), Error);
    CHECK_THROWS_AS(construct_L(6), Error);
}

TEST_CASE("construct_C orders and parameters") {
    const std::vector<std::pair<int, int>> cases{{2, 2}, {3, 3}, {4, 2}, {5, 5}, {9, 3}};
    for (const auto& [q, p] : cases) {
        const Scheme s = construct_C(q);
        CHECK(s.modulus() == p);
        const int nu = q == 4 || q == 9 ? 2 : 1;
        int order = 1;
        for (int e = 0; e < 2 * nu - 1; ++e) order *= p;
        CHECK(s.rows() == order);
        CHECK(is_j2_free_scheme(s).j2_free);

        const IncidenceStructure inc(blow_up(s));
        const auto params = config_params(inc);
        REQUIRE(params.has_value());
        CHECK(params->points == q * q);
        CHECK(params->point_degree == q);
        CHECK(is_elliptic_semiplane(inc));
    }
}

TEST_CASE("construct_C_mix shape and isomorphism at q = 5") {
    for (int q : {3, 4, 5}) {
        const Scheme s = construct_C_mix(q);
        CHECK_FALSE(s.is_pure());
        CHECK(s.blowup_rows() == q * q);
        const auto v = valency(s);
        REQUIRE(v.has_value());
        CHECK(*v == std::pair<int, int>(q, q));
        CHECK(is_j2_free_matrix(blow_up(s)).j2_free);
    }
    CHECK(are_isomorphic(IncidenceStructure(blow_up(construct_C_mix(5))),
                         IncidenceStructure(blow_up(construct_C(5)))));
}

TEST_CASE("corner permutation preserves J2-freeness") {
    const Scheme s = construct_C_mix(4, std::vector<int>{1, 2, 3, 0});
    CHECK(s.blowup_rows() == 16);
    CHECK(is_j2_free_matrix(blow_up(s)).j2_free);
    CHECK_THROWS_AS(construct_C_mix(4, std::vector<int>{0, 0, 1, 2}), Error);
}

TEST_CASE("parallel axiom separates the Fano plane from Cremona-Richmond") {
    const IncidenceStructure fano = cyclic_config(ResidueSet(7, {0, 1, 3}));
    CHECK(is_elliptic_semiplane(fano));

    const IncidenceStructure cr(blow_up(named("cremona_richmond").scheme));
    CHECK_FALSE(is_elliptic_semiplane(cr));

    BinaryMatrix doubled(2, 2);
    doubled.set(0, 0, 1);
    doubled.set(0, 1, 1);
    doubled.set(1, 0, 1);
    doubled.set(1, 1, 1);
    CHECK_THROWS_AS(is_elliptic_semiplane(IncidenceStructure(doubled)), Error);
}
