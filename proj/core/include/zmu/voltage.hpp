#pragma once

#include "zmu/graphs.hpp"
#include "zmu/scheme.hpp"

#include <vector>

namespace zmu {

/// Plus-directed edge carrying a voltage in Z_mu.
struct Arc {
    int from = 0;
    int to = 0;
    int voltage = 0;
    bool operator==(const Arc&) const = default;
};

/// Finite graph (loops and parallel edges allowed) with a voltage assignment.
/// Arcs are normalized on construction: from <= to (reversing negates the
/// voltage) and a loop voltage a is stored as min(a, mu - a).
class VoltageGraph {
public:
    VoltageGraph(int modulus, int vertex_count, std::vector<Arc> arcs);

    int modulus() const { return modulus_; }
    int vertex_count() const { return vertex_count_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool operator==(const VoltageGraph&) const = default;

private:
    int modulus_;
    int vertex_count_;
    std::vector<Arc> arcs_;
};

/// True when the lift is a graph: every loop voltage a has 2a != 0 (mod mu),
/// and arcs on the same endpoint pair have distinct voltages accounting for
/// direction (v->w voltage a clashes with w->v voltage -a; a loop stands for
/// the pair {a, -a}).
bool is_admissible_assignment(const VoltageGraph& graph);

struct Lift {
    int base_vertices = 0;
    int modulus = 0;
    Graph graph;  ///< vertex (v, a) at index v * mu + a

    int vertex(int base, int shift) const { return base * modulus + shift; }
};

/// Derived graph on vertex_count * mu vertices: (v,a) ~ (w,b) iff some arc
/// v->w with voltage s has b = a + s. Requires admissibility.
Lift lift(const VoltageGraph& graph);

/// Scheme of a voltage graph: S_vw collects voltages of arcs v->w and negated
/// voltages of arcs w->v; S_vv collects +/-a for each loop. The blow-up of the
/// result equals the lift's adjacency matrix.
Scheme scheme_of(const VoltageGraph& graph);

/// Inverse of scheme_of for admissible schemes. Each diagonal entry must have
/// even cardinality so it splits into {a, -a} loop pairs; otherwise Error.
VoltageGraph voltage_graph_of(const Scheme& scheme);

} // namespace zmu
