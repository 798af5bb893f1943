#include "zmu/graphs.hpp"

#include "zmu/error.hpp"
#include "zmu/scheme.hpp"

#include <algorithm>
#include <deque>

namespace zmu {

Graph::Graph(std::vector<std::vector<int>> adjacency) : adj_(std::move(adjacency)) {
    const int n = vertex_count();
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            if (nbrs[k] < 0 || nbrs[k] >= n) throw Error("Graph: neighbor out of range");
            if (k && nbrs[k] == nbrs[k - 1]) throw Error("Graph: duplicate edge");
        }
    }
    for (int v = 0; v < n; ++v) {
        if (std::binary_search(adj_[v].begin(), adj_[v].end(), v)) throw Error("Graph: loop");
        for (int w : adj_[v])
            if (!std::binary_search(adj_[w].begin(), adj_[w].end(), v))
                throw Error("Graph: adjacency not symmetric");
    }
}

Graph Graph::from_adjacency(const BinaryMatrix& adjacency) {
    const int n = adjacency.rows();
    if (adjacency.cols() != n) throw Error("Graph: adjacency matrix not square");
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        if (adjacency.get(i, i)) throw Error("Graph: nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            if (!adjacency.get(i, j)) continue;
            if (!adjacency.get(j, i)) throw Error("Graph: adjacency not symmetric");
            adj[i].push_back(j);
        }
    }
    return Graph(std::move(adj));
}

long long Graph::edge_count() const {
    long long s = 0;
    for (const auto& nbrs : adj_) s += static_cast<long long>(nbrs.size());
    return s / 2;
}

bool Graph::adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

BinaryMatrix Graph::adjacency() const {
    BinaryMatrix m(vertex_count(), vertex_count());
    for (int v = 0; v < vertex_count(); ++v)
        for (int w : adj_[v]) m.set(v, w, true);
    return m;
}

std::optional<ConfigParams> config_params(const IncidenceStructure& inc) {
    const auto& c = inc.incidence();
    if (c.rows() == 0 || c.cols() == 0) return std::nullopt;
    ConfigParams p{c.rows(), c.row_sum(0), c.cols(), c.col_sum(0)};
    for (int i = 1; i < c.rows(); ++i)
        if (c.row_sum(i) != p.point_degree) return std::nullopt;
    for (int j = 1; j < c.cols(); ++j)
        if (c.col_sum(j) != p.line_size) return std::nullopt;
    return p;
}

bool is_configuration(const IncidenceStructure& inc) {
    return config_params(inc).has_value() && is_j2_free_matrix(inc.incidence()).j2_free;
}

namespace {

// Shortest cycle through the BFS root that the parent tree can certify; the
// minimum over all roots is the girth.
struct RootScan {
    int length = 0;
    std::vector<int> cycle;
    bool found = false;
};

RootScan scan_from(const Graph& g, int root, int bound) {
    const int n = g.vertex_count();
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue;
    dist[root] = 0;
    queue.push_back(root);
    RootScan best;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        if (best.found && 2 * dist[x] + 1 >= best.length) break;
        if (2 * dist[x] + 1 >= bound) break;
        for (int y : g.neighbors(x)) {
            if (y == parent[x]) continue;
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
                continue;
            }
            // non-tree edge: closed walk through the root
            const int len = dist[x] + dist[y] + 1;
            if (!best.found || len < best.length) {
                best.found = true;
                best.length = len;
                best.cycle.clear();
                std::vector<int> left, right;
                for (int v = x; v >= 0; v = parent[v]) left.push_back(v);
                for (int v = y; v >= 0; v = parent[v]) right.push_back(v);
                std::reverse(left.begin(), left.end());  // root ... x
                best.cycle = left;                        // then y ... back to root, root omitted
                for (std::size_t k = 0; k + 1 < right.size(); ++k) best.cycle.push_back(right[k]);
            }
        }
    }
    return best;
}

} // namespace

GirthResult girth(const Graph& graph) {
    GirthResult result;
    int bound = graph.vertex_count() + 1;
    bool found = false;
    std::vector<int> cycle;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        RootScan scan = scan_from(graph, v, bound);
        if (scan.found && (!found || scan.length < bound)) {
            found = true;
            bound = scan.length;
            cycle = std::move(scan.cycle);
        }
    }
    if (!found) {
        result.acyclic = true;
        return result;
    }
    // The parent paths of the winning candidate are vertex-disjoint, otherwise
    // a strictly shorter cycle would have won; keep a defensive check.
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("girth: internal witness corruption");
    result.girth = bound;
    result.cycle = std::move(cycle);
    return result;
}

Graph levi(const IncidenceStructure& inc) {
    const auto& c = inc.incidence();
    std::vector<std::vector<int>> adj(c.rows() + c.cols());
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j)
            if (c.get(i, j)) {
                adj[i].push_back(c.rows() + j);
                adj[c.rows() + j].push_back(i);
            }
    return Graph(std::move(adj));
}

bool girth_lemma_check(const IncidenceStructure& inc) {
    const auto& c = inc.incidence();
    const bool j2 = is_j2_free_matrix(c).j2_free;

    // C4 in the Levi graph, counted directly on the incidence matrix
    bool c4_free = true;
    for (int i = 0; c4_free && i + 1 < c.rows(); ++i)
        for (int k = i + 1; c4_free && k < c.rows(); ++k)
            if (c.row_intersection(i, k) >= 2) c4_free = false;

    const GirthResult g = girth(levi(inc));
    const bool girth_ok = g.acyclic || g.girth >= 6;
    return (girth_ok == j2) && (c4_free == j2);
}

std::optional<int> regular_degree(const Graph& graph) {
    if (graph.vertex_count() == 0) return std::nullopt;
    const int k = graph.degree(0);
    for (int v = 1; v < graph.vertex_count(); ++v)
        if (graph.degree(v) != k) return std::nullopt;
    return k;
}

bool is_connected(const Graph& graph) {
    const int n = graph.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : graph.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    }
    return reached == n;
}

} // namespace zmu
