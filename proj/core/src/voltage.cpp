#include "zmu/voltage.hpp"

#include "zmu/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zmu {

VoltageGraph::VoltageGraph(int modulus, int vertex_count, std::vector<Arc> arcs)
    : modulus_(modulus), vertex_count_(vertex_count), arcs_(std::move(arcs)) {
    if (modulus < 1) throw Error("VoltageGraph: modulus must be positive");
    if (vertex_count < 0) throw Error("VoltageGraph: negative vertex count");
    for (auto& arc : arcs_) {
        if (arc.from < 0 || arc.from >= vertex_count || arc.to < 0 || arc.to >= vertex_count)
            throw Error("VoltageGraph: arc endpoint out of range");
        arc.voltage = mod_reduce(arc.voltage, modulus);
        if (arc.from > arc.to) {
            std::swap(arc.from, arc.to);
            arc.voltage = mod_reduce(-arc.voltage, modulus);
        } else if (arc.from == arc.to) {
            arc.voltage = std::min(arc.voltage, modulus - arc.voltage);
        }
    }
    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
        return std::tie(a.from, a.to, a.voltage) < std::tie(b.from, b.to, b.voltage);
    });
}

bool is_admissible_assignment(const VoltageGraph& graph) {
    const int mu = graph.modulus();
    std::map<std::pair<int, int>, std::set<int>> normalized;
    for (const auto& arc : graph.arcs()) {
        if (arc.from == arc.to) {
            // a loop realizes both a and -a; order <= 2 collapses lift edges
            if (arc.voltage == 0 || 2 * arc.voltage % mu == 0) return false;
            auto& seen = normalized[{arc.from, arc.to}];
            if (seen.count(arc.voltage) || seen.count(mu - arc.voltage)) return false;
            seen.insert(arc.voltage);
        } else {
            auto& seen = normalized[{arc.from, arc.to}];
            if (seen.count(arc.voltage)) return false;
            seen.insert(arc.voltage);
        }
    }
    return true;
}

Lift lift(const VoltageGraph& graph) {
    if (!is_admissible_assignment(graph)) throw Error("lift: assignment not admissible");
    const int mu = graph.modulus();
    const int n = graph.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) * mu);
    for (const auto& arc : graph.arcs()) {
        for (int a = 0; a < mu; ++a) {
            const int u = arc.from * mu + a;
            const int v = arc.to * mu + mod_reduce(a + arc.voltage, mu);
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }
    Lift result;
    result.base_vertices = n;
    result.modulus = mu;
    result.graph = Graph(std::move(adj));
    return result;
}

Scheme scheme_of(const VoltageGraph& graph) {
    if (!is_admissible_assignment(graph)) throw Error("scheme_of: assignment not admissible");
    const int mu = graph.modulus();
    const int n = graph.vertex_count();
    std::vector<std::vector<std::vector<int>>> sets(n, std::vector<std::vector<int>>(n));
    for (const auto& arc : graph.arcs()) {
        if (arc.from == arc.to) {
            sets[arc.from][arc.from].push_back(arc.voltage);
            sets[arc.from][arc.from].push_back(mu - arc.voltage);
        } else {
            sets[arc.from][arc.to].push_back(arc.voltage);
            sets[arc.to][arc.from].push_back(mod_reduce(-arc.voltage, mu));
        }
    }
    Scheme scheme(mu, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!sets[i][j].empty()) scheme.set_entry(i, j, ResidueSet(mu, sets[i][j]));
    return scheme;
}

VoltageGraph voltage_graph_of(const Scheme& scheme) {
    if (!is_admissible(scheme)) throw Error("voltage_graph_of: scheme not admissible");
    const int mu = scheme.modulus();
    const int n = scheme.rows();
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        if (!scheme.is_blank(i, i)) {
            const auto& diag = scheme.set_at(i, i);
            if (diag.size() % 2 != 0)
                throw Error("voltage_graph_of: diagonal entry of odd cardinality at row " +
                            std::to_string(i));
            for (int a : diag.members())
                if (a <= mu - a) arcs.push_back({i, i, a});
        }
        for (int j = i + 1; j < n; ++j)
            if (!scheme.is_blank(i, j))
                for (int a : scheme.set_at(i, j).members()) arcs.push_back({i, j, a});
    }
    return VoltageGraph(mu, n, std::move(arcs));
}

} // namespace zmu
