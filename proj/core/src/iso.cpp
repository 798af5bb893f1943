#include "zmu/iso.hpp"

#include "zmu/error.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <utility>

namespace zmu {

namespace {

std::uint64_t mix64(std::uint64_t h, std::uint64_t v) {
    std::uint64_t z = h + v + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Ordered partition of the vertices: cells are contiguous runs of `order`.
// A cell is identified by its start position, which survives splits (the
// first fragment keeps it), so queued cell ids never dangle.
struct Partition {
    std::vector<int> order;  // vertices in partition order
    std::vector<int> pos;    // pos[v]: position of v in order
    std::vector<int> cell;   // cell[p]: start position of the cell covering p
    std::vector<int> len;    // len[s]: cell length, meaningful at cell starts
    int cells = 0;
};

Partition initial_partition(int n, const Coloring& coloring) {
    Partition p;
    p.order.reserve(n);
    p.pos.assign(n, -1);
    p.cell.assign(n, 0);
    p.len.assign(n, 0);
    for (const std::vector<int>& cls : coloring.classes) {
        if (cls.empty()) continue;
        const int start = static_cast<int>(p.order.size());
        for (int v : cls) {
            p.pos[v] = static_cast<int>(p.order.size());
            p.order.push_back(v);
        }
        for (int k = start; k < static_cast<int>(p.order.size()); ++k) p.cell[k] = start;
        p.len[start] = static_cast<int>(p.order.size()) - start;
        ++p.cells;
    }
    return p;
}

// Equitable refinement: split cells by neighbor counts into queued splitter
// cells until no split applies. Fragments are ordered by ascending count,
// stable within a count, which keeps the operator deterministic.
void refine(const Graph& g, Partition& p, std::deque<int>& queue) {
    const int n = static_cast<int>(p.order.size());
    std::vector<int> cnt(n, 0);
    std::vector<char> cell_seen(n, 0);
    std::vector<int> splitter, touched, touched_cells;
    std::vector<std::pair<int, int>> tmp;  // (count, vertex)
    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        splitter.assign(p.order.begin() + s, p.order.begin() + s + p.len[s]);
        touched.clear();
        touched_cells.clear();
        for (int v : splitter)
            for (int u : g.neighbors(v))
                if (cnt[u]++ == 0) touched.push_back(u);
        for (int u : touched) {
            const int c = p.cell[p.pos[u]];
            if (!cell_seen[c]) {
                cell_seen[c] = 1;
                touched_cells.push_back(c);
            }
        }
        std::sort(touched_cells.begin(), touched_cells.end());
        for (int c : touched_cells) {
            cell_seen[c] = 0;
            const int length = p.len[c];
            if (length == 1) continue;
            tmp.clear();
            bool uniform = true;
            for (int k = c; k < c + length; ++k) {
                tmp.emplace_back(cnt[p.order[k]], p.order[k]);
                uniform = uniform && tmp.back().first == tmp.front().first;
            }
            if (uniform) continue;
            std::stable_sort(tmp.begin(), tmp.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            int frag_start = c;
            for (int k = 0; k < length; ++k) {
                const int v = tmp[k].second;
                const int at = c + k;
                p.order[at] = v;
                p.pos[v] = at;
                if (k > 0 && tmp[k].first != tmp[k - 1].first) {
                    p.len[frag_start] = at - frag_start;
                    queue.push_back(frag_start);
                    frag_start = at;
                    ++p.cells;
                }
                p.cell[at] = frag_start;
            }
            p.len[frag_start] = c + length - frag_start;
            queue.push_back(frag_start);
        }
        for (int u : touched) cnt[u] = 0;
    }
}

// Make {v} a singleton cell at the front of its cell; returns the queue
// seeding the follow-up refinement.
std::deque<int> individualize(Partition& p, int v) {
    const int c = p.cell[p.pos[v]];
    const int length = p.len[c];
    const int pv = p.pos[v];
    const int w = p.order[c];
    std::swap(p.order[c], p.order[pv]);
    p.pos[v] = c;
    p.pos[w] = pv;
    p.len[c] = 1;
    std::deque<int> queue{c};
    if (length > 1) {
        const int rest = c + 1;
        p.len[rest] = length - 1;
        for (int k = rest; k < c + length; ++k) p.cell[k] = rest;
        ++p.cells;
        queue.push_back(rest);
    }
    return queue;
}

// Isomorphism-invariant node summary: partition shape plus the quotient
// counts of one representative per cell (equal for all members once the
// partition is equitable).
std::uint64_t node_hash(const Graph& g, const Partition& p, std::size_t depth) {
    const int n = static_cast<int>(p.order.size());
    std::uint64_t h = mix64(0x243f6a8885a308d3ULL, depth);
    std::map<int, int> buckets;
    for (int s = 0; s < n; s += p.len[s]) {
        h = mix64(h, static_cast<std::uint64_t>(s));
        h = mix64(h, static_cast<std::uint64_t>(p.len[s]));
        buckets.clear();
        for (int u : g.neighbors(p.order[s])) ++buckets[p.cell[p.pos[u]]];
        for (const auto& [cs, k] : buckets) {
            h = mix64(h, static_cast<std::uint64_t>(cs));
            h = mix64(h, static_cast<std::uint64_t>(k));
        }
    }
    return h;
}

std::vector<std::uint64_t> leaf_certificate(const Graph& g, const Partition& p) {
    const std::size_t n = p.order.size();
    std::vector<std::uint64_t> cert((n * n + 63) / 64, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (int u : g.neighbors(p.order[i])) {
            const std::size_t bit = i * n + static_cast<std::size_t>(p.pos[u]);
            cert[bit >> 6] |= std::uint64_t{1} << (bit & 63);
        }
    return cert;
}

int uf_find(std::vector<int>& uf, int x) {
    while (uf[x] != x) {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    return x;
}

// Individualization-refinement search. The canonical leaf minimizes the pair
// (node hash vector along its path, relabeled adjacency certificate); both
// components are isomorphism-invariant, so isomorphic colored graphs yield
// identical certificates. Automorphisms are harvested from leaves that tie
// with the first or the best leaf, and are used for two sound prunings:
// skipping target-cell candidates in one orbit of the prefix stabilizer, and
// cutting subtrees whose hash deviates from the first path while exceeding
// the best path.
struct Canonizer {
    const Graph& g;
    int n;
    bool have_first = false;
    std::vector<std::uint64_t> first_cert, best_cert;
    std::vector<int> first_labeling, best_labeling;
    std::vector<std::uint64_t> firstpath, bestpath, path;
    std::vector<std::vector<int>> gens;
    std::vector<int> prefix;  // individualized vertices along the current path

    explicit Canonizer(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    void add_generator(const std::vector<int>& ref_labeling, const std::vector<int>& leaf_order) {
        std::vector<int> perm(n);
        bool identity = true;
        for (int v = 0; v < n; ++v) {
            perm[v] = leaf_order[ref_labeling[v]];
            identity = identity && perm[v] == v;
        }
        if (identity) return;
        for (const std::vector<int>& old : gens)
            if (old == perm) return;
        gens.push_back(std::move(perm));
    }

    bool orbit_pruned(int v, const std::vector<int>& explored) {
        std::vector<int> uf(n);
        std::iota(uf.begin(), uf.end(), 0);
        for (const std::vector<int>& perm : gens) {
            bool fixes = true;
            for (int u : prefix)
                if (perm[u] != u) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < n; ++x) {
                const int a = uf_find(uf, x);
                const int b = uf_find(uf, perm[x]);
                if (a != b) uf[a] = b;
            }
        }
        const int rv = uf_find(uf, v);
        for (int e : explored)
            if (uf_find(uf, e) == rv) return true;
        return false;
    }

    void leaf(const Partition& p, bool first_eq) {
        std::vector<std::uint64_t> cert = leaf_certificate(g, p);
        if (!have_first) {
            have_first = true;
            first_cert = cert;
            first_labeling = p.pos;
            best_cert = std::move(cert);
            best_labeling = p.pos;
            bestpath = path;
            return;
        }
        if (first_eq && cert == first_cert) add_generator(first_labeling, p.order);
        int cmp = 0;
        const std::size_t m = std::min(path.size(), bestpath.size());
        for (std::size_t i = 0; i < m && cmp == 0; ++i)
            cmp = path[i] < bestpath[i] ? -1 : path[i] > bestpath[i] ? 1 : 0;
        if (cmp == 0 && path.size() != bestpath.size()) cmp = path.size() < bestpath.size() ? -1 : 1;
        if (cmp == 0) cmp = cert < best_cert ? -1 : cert > best_cert ? 1 : 0;
        if (cmp < 0) {
            best_cert = std::move(cert);
            best_labeling = p.pos;
            bestpath = path;
        } else if (cmp == 0) {
            add_generator(best_labeling, p.order);
        }
    }

    // best_cmp: -1 when the current path is already lexicographically below
    // the best path, 0 while still equal; greater paths are pruned unless
    // they can still reproduce the first leaf.
    void dfs(Partition p, std::deque<int> pending, bool first_eq, int best_cmp) {
        refine(g, p, pending);
        const std::size_t depth = path.size();
        const std::uint64_t h = node_hash(g, p, depth);
        if (!have_first) {
            firstpath.push_back(h);
        } else {
            first_eq = first_eq && depth < firstpath.size() && h == firstpath[depth];
            if (best_cmp == 0) {
                if (depth >= bestpath.size() || h > bestpath[depth])
                    best_cmp = 1;
                else if (h < bestpath[depth])
                    best_cmp = -1;
            }
            if (!first_eq && best_cmp == 1) return;
        }
        path.push_back(h);
        if (p.cells == n) {
            leaf(p, first_eq);
            path.pop_back();
            return;
        }
        int target = -1, target_len = n + 1;
        for (int s = 0; s < n; s += p.len[s])
            if (p.len[s] > 1 && p.len[s] < target_len) {
                target = s;
                target_len = p.len[s];
            }
        const std::vector<int> candidates(p.order.begin() + target,
                                          p.order.begin() + target + target_len);
        std::vector<int> explored;
        for (int v : candidates) {
            if (!explored.empty() && orbit_pruned(v, explored)) continue;
            prefix.push_back(v);
            Partition child = p;
            std::deque<int> queue = individualize(child, v);
            dfs(std::move(child), std::move(queue), first_eq, best_cmp);
            prefix.pop_back();
            explored.push_back(v);
        }
        path.pop_back();
    }
};

using Perm = std::vector<int>;

bool is_identity(const Perm& p) {
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i) return false;
    return true;
}

Perm compose(const Perm& a, const Perm& b) {  // (a * b)(x) = a[b[x]]
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm inverse(const Perm& a) {
    Perm r(a.size());
    for (int i = 0; i < static_cast<int>(a.size()); ++i) r[a[i]] = i;
    return r;
}

// Textbook deterministic Schreier-Sims: levels hold strong generators fixing
// the base prefix, transversals are rebuilt per level, and every Schreier
// generator is sifted until the whole chain verifies.
struct StabChain {
    int n;
    std::vector<int> base;
    std::vector<std::vector<Perm>> S;
    std::vector<std::vector<int>> tidx;       // level -> point -> transversal slot
    std::vector<std::vector<int>> orbit_pts;  // level -> orbit in BFS order
    std::vector<std::vector<Perm>> tperm;     // level -> slot -> u with u(base) = point

    explicit StabChain(int degree) : n(degree) {}

    void add_level(int point) {
        base.push_back(point);
        S.emplace_back();
        tidx.emplace_back();
        orbit_pts.emplace_back();
        tperm.emplace_back();
    }

    void rebuild_orbit(std::size_t l) {
        tidx[l].assign(n, -1);
        orbit_pts[l].clear();
        tperm[l].clear();
        Perm id(n);
        std::iota(id.begin(), id.end(), 0);
        tidx[l][base[l]] = 0;
        orbit_pts[l].push_back(base[l]);
        tperm[l].push_back(std::move(id));
        for (std::size_t k = 0; k < orbit_pts[l].size(); ++k) {
            const int x = orbit_pts[l][k];
            for (const Perm& g : S[l]) {
                const int y = g[x];
                if (tidx[l][y] < 0) {
                    tidx[l][y] = static_cast<int>(orbit_pts[l].size());
                    orbit_pts[l].push_back(y);
                    tperm[l].push_back(compose(g, tperm[l][k]));
                }
            }
        }
    }

    std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const {
        for (std::size_t l = from; l < base.size(); ++l) {
            const int x = g[base[l]];
            if (tidx[l][x] < 0) return {std::move(g), l};
            g = compose(inverse(tperm[l][tidx[l][x]]), g);
        }
        return {std::move(g), base.size()};
    }

    // Verifies level l; on any strong-generator addition deeper levels are
    // re-verified and the caller must restart level l.
    bool check_level(std::size_t l) {
        rebuild_orbit(l);
        for (std::size_t k = 0; k < orbit_pts[l].size(); ++k) {
            const int x = orbit_pts[l][k];
            for (const Perm& g : S[l]) {
                Perm schreier =
                    compose(inverse(tperm[l][tidx[l][g[x]]]), compose(g, tperm[l][k]));
                if (is_identity(schreier)) continue;
                auto [h, j] = strip(std::move(schreier), l + 1);
                if (is_identity(h)) continue;
                if (j == base.size()) {
                    int moved = -1;
                    for (int y = 0; y < n; ++y)
                        if (h[y] != y) {
                            moved = y;
                            break;
                        }
                    add_level(moved);
                }
                for (std::size_t m = l + 1; m <= j && m < base.size(); ++m) S[m].push_back(h);
                for (std::size_t m = std::min(j, base.size() - 1); m > l; --m)
                    while (!check_level(m)) {
                    }
                return false;
            }
        }
        return true;
    }

    void build(const std::vector<Perm>& generators) {
        int b0 = -1;
        for (int y = 0; y < n && b0 < 0; ++y)
            if (generators.front()[y] != y) b0 = y;
        add_level(b0);
        S[0] = generators;
        while (!check_level(0)) {
        }
    }

    std::uint64_t order() const {
        std::uint64_t o = 1;
        for (const std::vector<int>& orbit : orbit_pts) o *= orbit.size();
        return o;
    }
};

Coloring bipartite_coloring(const IncidenceStructure& inc) {
    Coloring col;
    std::vector<int> pts(inc.points()), lns(inc.lines());
    std::iota(pts.begin(), pts.end(), 0);
    std::iota(lns.begin(), lns.end(), inc.points());
    col.classes = {std::move(pts), std::move(lns)};
    return col;
}

void validate_partition(const std::vector<std::vector<int>>& families, int count,
                        const char* what) {
    std::vector<char> seen(count, 0);
    int covered = 0;
    for (const std::vector<int>& f : families)
        for (int x : f) {
            if (x < 0 || x >= count || seen[x])
                throw Error(std::string("family_invariance: ") + what +
                            " families must partition the indices");
            seen[x] = 1;
            ++covered;
        }
    if (covered != count)
        throw Error(std::string("family_invariance: ") + what +
                    " families must partition the indices");
}

}  // namespace

CanonResult canonize_colored(const Graph& graph, const Coloring& coloring) {
    const int n = graph.vertex_count();
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (const std::vector<int>& cls : coloring.classes)
        for (int v : cls) {
            if (v < 0 || v >= n || seen[v])
                throw Error("canonize_colored: coloring must partition the vertices");
            seen[v] = 1;
            ++covered;
        }
    if (covered != n) throw Error("canonize_colored: coloring must partition the vertices");
    CanonResult result;
    if (n == 0) return result;
    Canonizer canonizer(graph);
    Partition p = initial_partition(n, coloring);
    std::deque<int> queue;
    for (int s = 0; s < n; s += p.len[s]) queue.push_back(s);
    canonizer.dfs(std::move(p), std::move(queue), true, 0);
    result.labeling = std::move(canonizer.best_labeling);
    result.generators = std::move(canonizer.gens);
    result.certificate = std::move(canonizer.best_cert);
    return result;
}

std::uint64_t permutation_group_order(int degree,
                                      const std::vector<std::vector<int>>& generators) {
    std::vector<Perm> gens;
    for (const std::vector<int>& g : generators) {
        if (static_cast<int>(g.size()) != degree)
            throw Error("permutation_group_order: generator degree mismatch");
        std::vector<char> seen(degree, 0);
        for (int x : g) {
            if (x < 0 || x >= degree || seen[x])
                throw Error("permutation_group_order: not a permutation");
            seen[x] = 1;
        }
        if (!is_identity(g)) gens.push_back(g);
    }
    if (gens.empty()) return 1;
    StabChain chain(degree);
    chain.build(gens);
    return chain.order();
}

BinaryMatrix canonical_form(const IncidenceStructure& inc) {
    const CanonResult cr = canonize_colored(levi(inc), bipartite_coloring(inc));
    const int points = inc.points(), lines = inc.lines();
    BinaryMatrix out(points, lines);
    for (int p = 0; p < points; ++p)
        for (int l = 0; l < lines; ++l)
            if (inc.incidence().get(p, l))
                out.set(cr.labeling[p], cr.labeling[points + l] - points, true);
    return out;
}

bool are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
    if (a.points() != b.points() || a.lines() != b.lines()) return false;
    return canonical_form(a) == canonical_form(b);
}

AutReport aut_order(const IncidenceStructure& inc) {
    const Graph lv = levi(inc);
    const int n = lv.vertex_count();
    const CanonResult cr = canonize_colored(lv, bipartite_coloring(inc));
    AutReport report;
    report.generators = cr.generators;
    report.order = permutation_group_order(n, report.generators);
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    for (const std::vector<int>& g : report.generators)
        for (int x = 0; x < n; ++x) {
            const int a = uf_find(uf, x);
            const int b = uf_find(uf, g[x]);
            if (a != b) uf[a] = b;
        }
    std::vector<int> smallest(n, n);
    for (int x = 0; x < n; ++x) {
        const int r = uf_find(uf, x);
        smallest[r] = std::min(smallest[r], x);
    }
    report.orbit.resize(n);
    for (int x = 0; x < n; ++x) report.orbit[x] = smallest[uf_find(uf, x)];
    return report;
}

std::uint64_t extended_aut_order(const IncidenceStructure& inc) {
    if (inc.points() != inc.lines()) return aut_order(inc).order;
    const Graph lv = levi(inc);
    Coloring col;
    std::vector<int> all(lv.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    col.classes = {std::move(all)};
    const CanonResult cr = canonize_colored(lv, col);
    return permutation_group_order(lv.vertex_count(), cr.generators);
}

bool family_invariance(const IncidenceStructure& inc,
                       const std::vector<std::vector<int>>& point_families,
                       const std::vector<std::vector<int>>& line_families) {
    validate_partition(point_families, inc.points(), "point");
    validate_partition(line_families, inc.lines(), "line");
    const int points = inc.points();
    std::vector<int> fpoint(inc.points()), fline(inc.lines());
    for (std::size_t k = 0; k < point_families.size(); ++k)
        for (int p : point_families[k]) fpoint[p] = static_cast<int>(k);
    for (std::size_t k = 0; k < line_families.size(); ++k)
        for (int l : line_families[k]) fline[l] = static_cast<int>(k);
    const AutReport report = aut_order(inc);
    // Every family mapped into a single family forces, by counting, every
    // family onto a family.
    for (const std::vector<int>& g : report.generators) {
        for (const std::vector<int>& f : point_families) {
            const int target = fpoint[g[f.front()]];
            for (int p : f)
                if (fpoint[g[p]] != target) return false;
        }
        for (const std::vector<int>& f : line_families) {
            const int target = fline[g[points + f.front()] - points];
            for (int l : f)
                if (fline[g[points + l] - points] != target) return false;
        }
    }
    return true;
}

}  // namespace zmu
