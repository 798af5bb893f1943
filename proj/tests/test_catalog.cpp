#include "zmu/catalog.hpp"
#include "zmu/error.hpp"
#include "zmu/graphs.hpp"
#include "zmu/scheme.hpp"

#include <doctest.h>

#include <algorithm>

using namespace zmu;

TEST_CASE("named fixtures match their stored expectations") {
    for (const auto& name : named_scheme_names()) {
        CAPTURE(name);
        const NamedScheme& fixture = named(name);
        const BinaryMatrix b = blow_up(fixture.scheme);
        CHECK(b.rows() == fixture.expected.blowup_rows);
        CHECK(b.cols() == fixture.expected.blowup_cols);
        if (fixture.expected.valency) CHECK(valency(fixture.scheme) == fixture.expected.valency);
        CHECK(is_j2_free_matrix(b).j2_free == fixture.expected.j2_free);
        if (fixture.expected.girth)
            CHECK(girth(Graph::from_adjacency(b)).girth == *fixture.expected.girth);
    }
    CHECK_THROWS_AS(named("no_such_fixture"), Error);
}

TEST_CASE("fixture schemes are admissible exactly when loop-free and skew") {
    CHECK(is_admissible(named("petersen").scheme));
    CHECK(is_admissible(named("T50").scheme));
    CHECK(is_admissible(named("T96").scheme));
    CHECK_THROWS_AS(is_admissible(named("reye").scheme), Error);  // not square
    CHECK_FALSE(is_admissible(named("L6").scheme));               // not skew
    CHECK_THROWS_AS(is_admissible(named("affine_9_4_12_3").scheme),
                    Error);  // mixed entries fall outside the predicate
}

TEST_CASE("robertson description equals the T50 blow-up") {
    const BinaryMatrix hs = robertson_hs();
    CHECK(hs == blow_up(named("T50").scheme));
    const Graph g = Graph::from_adjacency(hs);
    CHECK(g.vertex_count() == 50);
    CHECK(regular_degree(g) == 7);
    CHECK(girth(g).girth == 5);
}

TEST_CASE("balbuena minors at q = 4") {
    const Scheme m = balbuena_minor(4, BalbuenaVariant::M);
    CHECK(m.modulus() == 3);
    CHECK(m.blowup_rows() == 11);  // q^2 - q - 1
    CHECK(valency(m) == std::pair{3, 3});
    CHECK(is_j2_free_matrix(blow_up(m)).j2_free);
    const GirthResult levi_girth = girth(levi(IncidenceStructure(blow_up(m))));
    CHECK((levi_girth.acyclic || levi_girth.girth >= 6));

    const Scheme n = balbuena_minor(4, BalbuenaVariant::N);
    CHECK(n.blowup_rows() == 10);  // q^2 - q - 2
    CHECK(valency(n) == std::pair{3, 3});
    CHECK(is_j2_free_matrix(blow_up(n)).j2_free);

    CHECK_THROWS_AS(balbuena_minor(3, BalbuenaVariant::M), Error);  // needs q >= 4
    CHECK_THROWS_AS(balbuena_minor(6, BalbuenaVariant::M), Error);  // prime powers only
}

TEST_CASE("krcadinac tables and closures have the announced shapes") {
    const KrcadinacParams params = krcadinac_named_params("T360");
    const Scheme t = krcadinac_T(params);
    CHECK(t.modulus() == 3);
    CHECK(t.rows() == 10);
    CHECK(t.blowup_rows() == 30);
    CHECK(valency(t) == std::pair{5, 5});
    CHECK(is_j2_free_scheme(t).j2_free);

    const Scheme v = krcadinac_V(t);
    CHECK(v.blowup_rows() == 30);
    CHECK(valency(v) == std::pair{5, 5});
    CHECK(is_j2_free_scheme(v).j2_free);

    const Scheme vp = krcadinac_V_prime(t, 0, 0);
    CHECK(vp.rows() == 11);
    CHECK(vp.blowup_rows() == 34);
    CHECK(valency(vp) == std::pair{6, 6});
    // V' carries raw border cells, so only the matrix test applies.
    CHECK(is_j2_free_matrix(blow_up(vp)).j2_free);

    const Scheme k35 = krcadinac_35(t);
    CHECK(k35.blowup_rows() == 35);
    CHECK(valency(k35) == std::pair{6, 6});
    CHECK(is_j2_free_matrix(blow_up(k35)).j2_free);

    CHECK_THROWS_AS(krcadinac_named_params("T1"), Error);
}

TEST_CASE("krcadinac families partition the point and line sets") {
    // The families live on the 30-point configurations, five 6-sets per side.
    const KrcadinacFamilies families = krcadinac_families();
    REQUIRE(families.point_families.size() == 5);
    REQUIRE(families.line_families.size() == 5);
    std::vector<int> points, lines;
    for (const auto& family : families.point_families) {
        CHECK(family.size() == 6);
        points.insert(points.end(), family.begin(), family.end());
    }
    for (const auto& family : families.line_families) {
        CHECK(family.size() == 6);
        lines.insert(lines.end(), family.begin(), family.end());
    }
    std::sort(points.begin(), points.end());
    std::sort(lines.begin(), lines.end());
    REQUIRE(points.size() == 30);
    REQUIRE(lines.size() == 30);
    for (int i = 0; i < 30; ++i) {
        CHECK(points[i] == i);
        CHECK(lines[i] == i);
    }
}

TEST_CASE("cyclic_config builds the Fano plane") {
    const IncidenceStructure fano = cyclic_config(ResidueSet(7, {0, 1, 3}));
    const auto params = config_params(fano);
    REQUIRE(params.has_value());
    CHECK(params->points == 7);
    CHECK(params->point_degree == 3);
    CHECK(params->lines == 7);
    CHECK(params->line_size == 3);
    CHECK(is_configuration(fano));
    // A repeated difference means lines would share two points; rejected up front.
    CHECK_THROWS_AS(cyclic_config(ResidueSet(5, {0, 1, 2})), Error);
}
