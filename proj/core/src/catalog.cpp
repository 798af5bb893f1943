#include "zmu/catalog.hpp"

#include "zmu/error.hpp"
#include "zmu/semiplanes.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace zmu {

namespace {

Scheme make_petersen() {
    return Scheme::pure(5, {{{{1, 4}}, {{0}}},
                            {{{0}}, {{2, 3}}}});
}

Scheme make_cremona_richmond() {
    return Scheme::pure(5, {{{{2, 3}}, {}, {{0}}},
                            {{}, {{1, 4}}, {{4}}},
                            {{{0}}, {{1}}, {{0}}}});
}

Scheme make_reye() {
    return Scheme::pure(4, {{{{0}}, {{0}}, {{0}}, {{0}}},
                            {{{0, 1}}, {}, {{2}}, {{3}}},
                            {{}, {{0, 3}}, {{2}}, {{1}}}});
}

// Diagonal {0,1,3} resp. {2,3,5}, upper right singletons {i*j mod 7}, lower
// left their negatives. Skew fails on the diagonal, so this is an incidence
// fixture, not a graph.
Scheme make_t98() {
    Scheme s(7, 14, 14);
    for (int i = 0; i < 7; ++i) {
        s.set_entry(i, i, ResidueSet(7, {0, 1, 3}));
        s.set_entry(7 + i, 7 + i, ResidueSet(7, {2, 3, 5}));
    }
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            const int m = i * j % 7;
            s.set_entry(i, 7 + j, ResidueSet(7, {m}));
            s.set_entry(7 + j, i, ResidueSet(7, {(7 - m) % 7}));
        }
    return s;
}

// Multiplier blocks run 1..4 then 0, matching the pentagram/pentagon labels.
Scheme make_t50() {
    Scheme s(5, 10, 10);
    for (int i = 0; i < 5; ++i) {
        s.set_entry(i, i, ResidueSet(5, {2, 3}));
        s.set_entry(5 + i, 5 + i, ResidueSet(5, {1, 4}));
    }
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const int m = ((i + 1) % 5) * ((j + 1) % 5) % 5;
            s.set_entry(i, 5 + j, ResidueSet(5, {m}));
            s.set_entry(5 + j, i, ResidueSet(5, {(5 - m) % 5}));
        }
    return s;
}

// The order-48 Desarguesian semiplane scheme over Z_6; -1 marks blanks.
// Also the upper-right quarter of T96.
constexpr int kL6[8][8] = {
    {-1, 3, 1, 2, 5, 4, 0, 0},
    {0, -1, 3, 1, 2, 5, 4, 0},
    {4, 0, -1, 3, 1, 2, 5, 0},
    {5, 4, 0, -1, 3, 1, 2, 0},
    {2, 5, 4, 0, -1, 3, 1, 0},
    {1, 2, 5, 4, 0, -1, 3, 0},
    {3, 1, 2, 5, 4, 0, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, -1},
};

Scheme make_l6() {
    Scheme s(6, 8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (kL6[i][j] >= 0) s.set_entry(i, j, ResidueSet(6, {kL6[i][j]}));
    return s;
}

Scheme make_t96() {
    Scheme s(6, 16, 16);
    for (int i = 0; i < 8; ++i) {
        s.set_entry(i, i, ResidueSet(6, {1, 5}));
        s.set_entry(8 + i, 8 + i, ResidueSet(6, {2, 4}));
    }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (kL6[i][j] < 0) continue;
            s.set_entry(i, 8 + j, ResidueSet(6, {kL6[i][j]}));
            s.set_entry(8 + j, i, ResidueSet(6, {(6 - kL6[i][j]) % 6}));
        }
    return s;
}

Scheme make_affine_9_4_12_3() {
    static const int core[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
    Scheme s(3, 3, 4);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) s.set_entry(i, j, ResidueSet(3, {core[i][j]}));
        s.set_entry(i, 3, ColSym{3, i + 1});
    }
    return s;
}

// Circulant pattern: entry (i,j) depends only on (j - i) mod 5.
Scheme make_fln35() {
    static const std::vector<std::vector<int>> by_offset = {{0, 1}, {6}, {2}, {2}, {6}};
    Scheme s(7, 5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            s.set_entry(i, j, ResidueSet(7, by_offset[(j - i + 5) % 5]));
    return s;
}

void check_expected(const NamedScheme& ns) {
    const ExpectedProperties& e = ns.expected;
    const BinaryMatrix m = blow_up(ns.scheme);
    if (m.rows() != e.blowup_rows || m.cols() != e.blowup_cols)
        throw Error("catalog: " + ns.name + ": blow-up is " + std::to_string(m.rows()) + " x " +
                    std::to_string(m.cols()) + ", expected " + std::to_string(e.blowup_rows) +
                    " x " + std::to_string(e.blowup_cols));
    if (e.valency && valency(ns.scheme) != e.valency)
        throw Error("catalog: " + ns.name + ": valency mismatch");
    if (is_j2_free_matrix(m).j2_free != e.j2_free)
        throw Error("catalog: " + ns.name + ": J2-freeness mismatch");
    if (e.girth) {
        const GirthResult g = girth(Graph::from_adjacency(m));
        if (g.acyclic || g.girth != *e.girth)
            throw Error("catalog: " + ns.name + ": girth mismatch");
    }
}

std::map<std::string, NamedScheme> build_catalog() {
    std::map<std::string, NamedScheme> cat;
    auto put = [&cat](const std::string& name, Scheme s, ExpectedProperties e) {
        NamedScheme ns{name, std::move(s), e};
        check_expected(ns);
        cat.emplace(name, std::move(ns));
    };
    put("petersen", make_petersen(),
        {10, 10, std::pair{3, 3}, true, 5, 120});
    put("cremona_richmond", make_cremona_richmond(),
        {15, 15, std::pair{3, 3}, true, std::nullopt, 720});
    put("reye", make_reye(),
        {12, 16, std::pair{4, 3}, true, std::nullopt, 576});
    put("T98", make_t98(),
        {98, 98, std::pair{10, 10}, true, std::nullopt, std::nullopt});
    put("T50", make_t50(),
        {50, 50, std::pair{7, 7}, true, 5, 252000});
    // The {2,4} line-fiber circulants split into triangles (gcd(2,6) = 2), so
    // the blow-up has girth 3 even though the scheme is J2-free and a 5-cycle
    // through vertices {0,1,2,90,92} exists.
    put("T96", make_t96(),
        {96, 96, std::pair{9, 9}, true, 3, std::nullopt});
    put("affine_9_4_12_3", make_affine_9_4_12_3(),
        {9, 12, std::pair{4, 3}, true, std::nullopt, 432});
    put("L6", make_l6(),
        {48, 48, std::pair{7, 7}, true, std::nullopt, std::nullopt});
    put("fln35", make_fln35(),
        {35, 35, std::pair{6, 6}, true, std::nullopt, 140});
    return cat;
}

const std::map<std::string, NamedScheme>& catalog() {
    static const std::map<std::string, NamedScheme> cat = build_catalog();
    return cat;
}

}  // namespace

const NamedScheme& named(const std::string& name) {
    const auto& cat = catalog();
    const auto it = cat.find(name);
    if (it == cat.end()) throw Error("named: unknown scheme \"" + name + "\"");
    return it->second;
}

std::vector<std::string> named_scheme_names() {
    std::vector<std::string> names;
    for (const auto& [name, ns] : catalog()) names.push_back(name);
    return names;
}

BinaryMatrix robertson_hs() {
    BinaryMatrix m(50, 50);
    const auto join = [&m](int u, int v) {
        m.set(u, v, true);
        m.set(v, u, true);
    };
    for (int b = 0; b < 5; ++b)
        for (int i = 0; i < 5; ++i) {
            join(5 * b + i, 5 * b + (i + 2) % 5);
            join(25 + 5 * b + i, 25 + 5 * b + (i + 1) % 5);
        }
    for (int bj = 0; bj < 5; ++bj)
        for (int bk = 0; bk < 5; ++bk) {
            const int jk = ((bj + 1) % 5) * ((bk + 1) % 5) % 5;
            for (int i = 0; i < 5; ++i) join(5 * bj + i, 25 + 5 * bk + (i + jk) % 5);
        }
    return m;
}

Scheme balbuena_minor(int q, BalbuenaVariant variant) {
    if (q < 4) throw Error("balbuena_minor: requires q >= 4");
    const Scheme l = construct_L(q);
    const int mu = q - 1;
    // s is the number of new points (and new lines) closing the minor.
    const int s = variant == BalbuenaVariant::M ? q - 2 : q - 3;
    std::vector<int> sizes(q, mu);
    sizes[q - 1] = s;
    Scheme out(mu, sizes, sizes);
    const int first_col = variant == BalbuenaVariant::M ? 1 : 0;
    for (int r = 0; r + 1 < q; ++r)
        for (int c = 0; c + 1 < q; ++c) out.set_entry(r, c, l.entry(r + 2, c + first_col));
    if (variant == BalbuenaVariant::M) {
        for (int r = 0; r + 2 < q; ++r) out.set_entry(r, q - 1, ColSym{s, r + 1});
        for (int c = 1; c + 1 < q; ++c) out.set_entry(q - 1, c, RowSym{s, c});
    } else {
        for (int r = 0; r + 3 < q; ++r) out.set_entry(r, q - 1, ColSym{s, r + 1});
        for (int c = 2; c + 1 < q; ++c) out.set_entry(q - 1, c, RowSym{s, c - 1});
    }
    return out;
}

Scheme krcadinac_T(const KrcadinacParams& params) {
    // L^(3) in the same convention as kL6; -1 marks blanks.
    static const int kl3[5][5] = {
        {-1, 0, 1, 2, 0},
        {0, -1, 2, 1, 0},
        {1, 2, -1, 0, 0},
        {2, 1, 0, -1, 0},
        {0, 0, 0, 0, -1},
    };
    Scheme s(3, 10, 10);
    for (int i = 0; i < 5; ++i) {
        s.set_entry(i, i, ResidueSet(3, {params.alpha[i]}));
        s.set_entry(5 + i, 5 + i, ResidueSet(3, {params.beta[i]}));
    }
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (kl3[i][j] < 0) continue;
            s.set_entry(i, 5 + j, ResidueSet(3, {kl3[i][j]}));
            s.set_entry(5 + j, i, ResidueSet(3, {(3 - kl3[i][j]) % 3}));
        }
    return s;
}

KrcadinacParams krcadinac_named_params(const std::string& which) {
    if (which == "T360") return {{1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}};
    if (which == "T72") return {{1, 1, 1, 1, 0}, {1, 1, 1, 1, 0}};
    if (which == "T36") return {{1, 1, 1, 1, 1}, {1, 1, 1, 1, 0}};
    if (which == "T18") return {{1, 1, 1, 1, 1}, {1, 1, 1, 0, 0}};
    throw Error("krcadinac_named_params: unknown name \"" + which + "\"");
}

std::vector<std::string> krcadinac_param_names() { return {"T360", "T72", "T36", "T18"}; }

namespace {

// Supports of two entries meet; Blank never overlaps anything.
bool entries_overlap(const Scheme& s, int i1, int i2, int j1, int j2) {
    if (s.is_blank(i1, j1) || s.is_blank(i2, j2)) return false;
    const std::vector<int>& a = s.set_at(i1, j1).members();
    const std::vector<int>& b = s.set_at(i2, j2).members();
    for (int r : a)
        if (std::find(b.begin(), b.end(), r) != b.end()) return true;
    return false;
}

}  // namespace

Scheme krcadinac_V(const Scheme& t) {
    if (t.modulus() != 3 || t.rows() != 10 || t.cols() != 10 || !t.is_pure())
        throw Error("krcadinac_V: expects a pure 10 x 10 scheme over Z_3");
    static const int sigma[10] = {0, 5, 1, 6, 2, 7, 3, 8, 4, 9};
    Scheme v(3, 10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) v.set_entry(i, j, t.entry(sigma[i], sigma[j]));
    for (int p = 0; p < 5; ++p)
        for (int k = 0; k < 10; ++k) {
            if (entries_overlap(v, 2 * p, 2 * p + 1, k, k))
                throw Error("krcadinac_V: rows " + std::to_string(2 * p) + " and " +
                            std::to_string(2 * p + 1) + " overlap in column " + std::to_string(k));
            if (entries_overlap(v, k, k, 2 * p, 2 * p + 1))
                throw Error("krcadinac_V: columns " + std::to_string(2 * p) + " and " +
                            std::to_string(2 * p + 1) + " overlap in row " + std::to_string(k));
        }
    return v;
}

Scheme krcadinac_V_prime(const Scheme& t, int eta, int zeta) {
    const Scheme v = krcadinac_V(t);
    std::vector<int> sizes(11, 3);
    sizes[10] = 4;
    Scheme out(3, sizes, sizes);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) out.set_entry(i, j, v.entry(i, j));
    for (int d : {8, 9}) {
        std::vector<int> members = v.set_at(d, d).members();
        members.push_back(d == 8 ? eta : zeta);
        out.set_entry(d, d, ResidueSet(3, members));
    }
    for (int i = 0; i < 8; ++i) {
        out.set_entry(i, 10, ColSym{4, i / 2 + 1});
        out.set_entry(10, i, RowSym{4, i / 2 + 1});
    }
    return out;
}

Scheme krcadinac_35(const Scheme& t) {
    const Scheme v = krcadinac_V(t);
    std::vector<int> sizes(11, 3);
    sizes[10] = 5;
    Scheme out(3, sizes, sizes);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) out.set_entry(i, j, v.entry(i, j));
    for (int i = 0; i < 10; ++i) {
        out.set_entry(i, 10, ColSym{5, i / 2 + 1});
        out.set_entry(10, i, RowSym{5, i / 2 + 1});
    }
    return out;
}

KrcadinacFamilies krcadinac_families() {
    KrcadinacFamilies f;
    for (int l = 0; l < 5; ++l) {
        std::vector<int> range;
        for (int x = 6 * l; x < 6 * (l + 1); ++x) range.push_back(x);
        f.point_families.push_back(range);
        f.line_families.push_back(std::move(range));
    }
    return f;
}

IncidenceStructure cyclic_config(const ResidueSet& base) {
    if (!dds_check(base).is_dds)
        throw Error("cyclic_config: base line is not a deficient difference set");
    return IncidenceStructure(circulant(base.modulus(), base));
}

}  // namespace zmu
