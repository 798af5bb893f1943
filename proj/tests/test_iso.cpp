#include "zmu/iso.hpp"
#include "zmu/catalog.hpp"
#include "zmu/graphs.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

using namespace zmu;

namespace {

BinaryMatrix random_incidence(std::mt19937_64& rng, int rows, int cols) {
    BinaryMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (rng() % 3 == 0) m.set(i, j, 1);
    return m;
}

BinaryMatrix permuted(const BinaryMatrix& m, const std::vector<int>& rowp,
                      const std::vector<int>& colp) {
    BinaryMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) out.set(rowp[i], colp[j], 1);
    return out;
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng() % (i + 1)]);
    return p;
}

// Automorphism pairs by definition: point permutations preserving the line
// multiset, each completed by every line permutation fixing the multiset.
std::uint64_t brute_aut(const BinaryMatrix& m) {
    std::vector<int> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> lines(m.cols());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (m.get(i, j)) lines[j].push_back(i);
    auto sorted_lines = lines;
    std::sort(sorted_lines.begin(), sorted_lines.end());

    std::uint64_t total = 0;
    do {
        std::vector<std::vector<int>> mapped(m.cols());
        for (int j = 0; j < m.cols(); ++j) {
            for (int i : lines[j]) mapped[j].push_back(perm[i]);
            std::sort(mapped[j].begin(), mapped[j].end());
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped != sorted_lines) continue;
        std::uint64_t completions = 1;
        for (std::size_t a = 0; a < mapped.size();) {
            std::size_t b = a;
            while (b < mapped.size() && mapped[b] == mapped[a]) ++b;
            for (std::size_t k = 2; k <= b - a; ++k) completions *= k;
            a = b;
        }
        total += completions;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Isomorphism by definition: some point permutation carries one line multiset
// to the other.
bool brute_iso(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    auto line_multiset = [](const BinaryMatrix& m, const std::vector<int>& perm) {
        std::vector<std::vector<int>> lines(m.cols());
        for (int j = 0; j < m.cols(); ++j) {
            for (int i = 0; i < m.rows(); ++i)
                if (m.get(i, j)) lines[j].push_back(perm[i]);
            std::sort(lines[j].begin(), lines[j].end());
        }
        std::sort(lines.begin(), lines.end());
        return lines;
    };
    std::vector<int> identity(b.rows());
    std::iota(identity.begin(), identity.end(), 0);
    const auto target = line_multiset(b, identity);
    std::vector<int> perm = identity;
    do {
        if (line_multiset(a, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Closure of the generated permutation group by plain BFS.
std::uint64_t brute_group_order(int degree, const std::vector<std::vector<int>>& generators) {
    std::vector<int> identity(degree);
    std::iota(identity.begin(), identity.end(), 0);
    std::set<std::vector<int>> seen{identity};
    std::vector<std::vector<int>> frontier{identity};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier)
            for (const auto& gen : generators) {
                std::vector<int> composed(degree);
                for (int i = 0; i < degree; ++i) composed[i] = gen[g[i]];
                if (seen.insert(composed).second) next.push_back(composed);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

} // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 150; ++t) {
        const int rows = 2 + static_cast<int>(rng() % 5);
        const int cols = 2 + static_cast<int>(rng() % 5);
        const BinaryMatrix m = random_incidence(rng, rows, cols);
        const BinaryMatrix shuffled =
            permuted(m, random_perm(rng, rows), random_perm(rng, cols));
        CHECK(canonical_form(IncidenceStructure(m)) ==
              canonical_form(IncidenceStructure(shuffled)));
        CHECK(are_isomorphic(IncidenceStructure(m), IncidenceStructure(shuffled)));
    }
}

TEST_CASE("are_isomorphic agrees with the brute-force definition") {
    std::mt19937_64 rng(103);
    int negatives = 0;
    for (int t = 0; t < 120; ++t) {
        const int rows = 2 + static_cast<int>(rng() % 4);
        const int cols = 2 + static_cast<int>(rng() % 4);
        const BinaryMatrix a = random_incidence(rng, rows, cols);
        const BinaryMatrix b = random_incidence(rng, rows, cols);
        const bool expect = brute_iso(a, b);
        if (!expect) ++negatives;
        CHECK(are_isomorphic(IncidenceStructure(a), IncidenceStructure(b)) == expect);
    }
    CHECK(negatives > 10);
}

TEST_CASE("aut_order matches brute force on small structures") {
    std::mt19937_64 rng(107);
    for (int t = 0; t < 120; ++t) {
        const int rows = 2 + static_cast<int>(rng() % 5);
        const int cols = 1 + static_cast<int>(rng() % 5);
        const BinaryMatrix m = random_incidence(rng, rows, cols);
        const IncidenceStructure inc(m);
        CHECK(aut_order(inc).order == brute_aut(m));
    }
}

TEST_CASE("automorphism generators act as automorphisms") {
    const IncidenceStructure fano = cyclic_config(ResidueSet(7, {0, 1, 3}));
    const AutReport report = aut_order(fano);
    CHECK(report.order == 168);
    for (const auto& generator : report.generators) {
        REQUIRE(generator.size() == 14u);  // points then lines
        std::vector<int> rowp(generator.begin(), generator.begin() + 7);
        std::vector<int> colp;
        for (std::size_t k = 7; k < generator.size(); ++k) colp.push_back(generator[k] - 7);
        CHECK(permuted(fano.incidence(), rowp, colp) == fano.incidence());
    }
}

TEST_CASE("self-dual structures double the extended group") {
    const IncidenceStructure fano = cyclic_config(ResidueSet(7, {0, 1, 3}));
    CHECK(aut_order(fano).order == 168);
    CHECK(extended_aut_order(fano) == 336);

    // The Reye configuration's extended group also contains dualities.
    const IncidenceStructure reye(blow_up(named("reye").scheme));
    CHECK(aut_order(reye).order == 576);
}

TEST_CASE("permutation_group_order agrees with BFS closure") {
    std::mt19937_64 rng(109);
    for (int t = 0; t < 60; ++t) {
        const int degree = 2 + static_cast<int>(rng() % 5);
        std::vector<std::vector<int>> generators;
        const int count = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < count; ++g) generators.push_back(random_perm(rng, degree));
        CHECK(permutation_group_order(degree, generators) ==
              brute_group_order(degree, generators));
    }
    // Classic orders: S_5 from a transposition and a 5-cycle.
    CHECK(permutation_group_order(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}) == 120);
    CHECK(permutation_group_order(4, {}) == 1);
}

TEST_CASE("family invariance distinguishes respected partitions") {
    const IncidenceStructure fano = cyclic_config(ResidueSet(7, {0, 1, 3}));
    // The whole point set and line set are always respected.
    std::vector<std::vector<int>> all_points{{0, 1, 2, 3, 4, 5, 6}};
    std::vector<std::vector<int>> all_lines{{0, 1, 2, 3, 4, 5, 6}};
    CHECK(family_invariance(fano, all_points, all_lines));

    // A single pinned point is moved by the transitive group.
    std::vector<std::vector<int>> pinned{{0}, {1, 2, 3, 4, 5, 6}};
    CHECK_FALSE(family_invariance(fano, pinned, all_lines));
}
