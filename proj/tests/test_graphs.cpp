#include "zmu/graphs.hpp"
#include "zmu/catalog.hpp"
#include "zmu/error.hpp"
#include "zmu/scheme.hpp"

#include <doctest.h>

#include <algorithm>
#include <queue>
#include <random>
#include <vector>

using namespace zmu;

namespace {

BinaryMatrix cycle_adjacency(int n) {
    BinaryMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.set(i, (i + 1) % n, 1);
        m.set((i + 1) % n, i, 1);
    }
    return m;
}

BinaryMatrix complete_adjacency(int n) {
    BinaryMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m.set(i, j, 1);
    return m;
}

// Kneser graph K(5,2): an independent realization of the Petersen graph.
BinaryMatrix kneser_5_2() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
    BinaryMatrix m(10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const auto [a, b] = pairs[i];
            const auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) m.set(i, j, 1);
        }
    return m;
}

// BFS girth oracle: shortest cycle through each start vertex.
int girth_oracle(const Graph& g) {
    int best = -1;
    const int n = g.vertex_count();
    for (int start = 0; start < n; ++start) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> queue;
        dist[start] = 0;
        queue.push(start);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if (w != parent[u]) {
                    const int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

BinaryMatrix random_graph(std::mt19937_64& rng, int n, int percent) {
    BinaryMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(rng() % 100) < percent) {
                m.set(i, j, 1);
                m.set(j, i, 1);
            }
    return m;
}

} // namespace

TEST_CASE("girth of basic graphs") {
    CHECK(girth(Graph::from_adjacency(cycle_adjacency(6))).girth == 6);
    CHECK(girth(Graph::from_adjacency(complete_adjacency(4))).girth == 3);
    CHECK(girth(Graph::from_adjacency(kneser_5_2())).girth == 5);

    BinaryMatrix path(3, 3);
    path.set(0, 1, 1);
    path.set(1, 0, 1);
    path.set(1, 2, 1);
    path.set(2, 1, 1);
    CHECK(girth(Graph::from_adjacency(path)).acyclic);
}

TEST_CASE("girth reports a genuine shortest cycle") {
    const Graph g = Graph::from_adjacency(kneser_5_2());
    const GirthResult result = girth(g);
    REQUIRE_FALSE(result.acyclic);
    REQUIRE(result.girth == 5);
    REQUIRE(result.cycle.size() == 5);
    for (std::size_t i = 0; i < result.cycle.size(); ++i) {
        const int u = result.cycle[i];
        const int w = result.cycle[(i + 1) % result.cycle.size()];
        CHECK(g.adjacent(u, w));
    }
    // Vertices along the cycle are pairwise distinct.
    auto sorted = result.cycle;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("girth matches a BFS oracle on random graphs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const Graph g = Graph::from_adjacency(random_graph(rng, n, 25));
        const GirthResult result = girth(g);
        const int oracle = girth_oracle(g);
        if (oracle < 0)
            CHECK(result.acyclic);
        else
            CHECK(result.girth == oracle);
    }
}

TEST_CASE("petersen blow-up is the Petersen graph's degree sequence") {
    const BinaryMatrix b = blow_up(named("petersen").scheme);
    const Graph g = Graph::from_adjacency(b);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);
    CHECK(regular_degree(g) == 3);
    CHECK(is_connected(g));
    CHECK(girth(g).girth == 5);
}

TEST_CASE("incidence parameters of a cycle's Levi view") {
    // The incidence matrix of C6 seen as points vs edges: a (6_2, 6_2).
    BinaryMatrix inc(6, 6);
    for (int i = 0; i < 6; ++i) {
        inc.set(i, i, 1);
        inc.set((i + 1) % 6, i, 1);
    }
    const IncidenceStructure structure(inc);
    const auto params = config_params(structure);
    REQUIRE(params.has_value());
    CHECK(params->points == 6);
    CHECK(params->point_degree == 2);
    CHECK(params->lines == 6);
    CHECK(params->line_size == 2);
}

TEST_CASE("configuration requires J2-freeness on top of parameters") {
    // Two points on two common lines: regular but not a configuration.
    BinaryMatrix doubled(2, 2);
    doubled.set(0, 0, 1);
    doubled.set(0, 1, 1);
    doubled.set(1, 0, 1);
    doubled.set(1, 1, 1);
    CHECK(config_params(IncidenceStructure(doubled)).has_value());
    CHECK_FALSE(is_configuration(IncidenceStructure(doubled)));

    CHECK(is_configuration(IncidenceStructure(blow_up(named("cremona_richmond").scheme))));
}

TEST_CASE("levi graph doubles the vertex set and respects bipartition") {
    const IncidenceStructure inc(blow_up(named("reye").scheme));
    const Graph g = levi(inc);
    CHECK(g.vertex_count() == inc.points() + inc.lines());
    for (int p = 0; p < inc.points(); ++p)
        for (int q = 0; q < inc.points(); ++q) CHECK_FALSE(g.adjacent(p, q));
    for (int p = 0; p < inc.points(); ++p)
        for (int l = 0; l < inc.lines(); ++l)
            CHECK(g.adjacent(p, inc.points() + l) == inc.incidence().get(p, l));
}

TEST_CASE("girth lemma ties Levi girth to J2-freeness") {
    CHECK(girth_lemma_check(IncidenceStructure(blow_up(named("T98").scheme))));
    BinaryMatrix doubled(2, 2);
    doubled.set(0, 0, 1);
    doubled.set(0, 1, 1);
    doubled.set(1, 0, 1);
    doubled.set(1, 1, 1);
    CHECK(girth_lemma_check(IncidenceStructure(doubled)));
    const GirthResult levi_girth = girth(levi(IncidenceStructure(doubled)));
    CHECK(levi_girth.girth == 4);
}

TEST_CASE("connectivity") {
    BinaryMatrix two_islands(4, 4);
    two_islands.set(0, 1, 1);
    two_islands.set(1, 0, 1);
    two_islands.set(2, 3, 1);
    two_islands.set(3, 2, 1);
    CHECK_FALSE(is_connected(Graph::from_adjacency(two_islands)));
    CHECK(is_connected(Graph::from_adjacency(cycle_adjacency(5))));
}
