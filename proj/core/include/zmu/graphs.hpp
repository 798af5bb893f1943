#pragma once

#include "zmu/binary_matrix.hpp"

#include <optional>
#include <vector>

namespace zmu {

/// Simple undirected graph, adjacency lists sorted ascending.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::vector<int>> adjacency);

    /// Validates symmetry and a zero diagonal.
    static Graph from_adjacency(const BinaryMatrix& adjacency);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    BinaryMatrix adjacency() const;

private:
    std::vector<std::vector<int>> adj_;
};

/// Points x lines incidence matrix.
class IncidenceStructure {
public:
    IncidenceStructure() = default;
    explicit IncidenceStructure(BinaryMatrix incidence) : inc_(std::move(incidence)) {}

    const BinaryMatrix& incidence() const { return inc_; }
    int points() const { return inc_.rows(); }
    int lines() const { return inc_.cols(); }

    bool operator==(const IncidenceStructure&) const = default;

private:
    BinaryMatrix inc_;
};

/// Parameters (m_k, n_l): m points of degree k, n lines of size l.
struct ConfigParams {
    int points = 0;
    int point_degree = 0;
    int lines = 0;
    int line_size = 0;
    bool operator==(const ConfigParams&) const = default;
};

/// Present iff all row sums agree and all column sums agree.
std::optional<ConfigParams> config_params(const IncidenceStructure& inc);

/// Constant degrees plus J2-freeness (no two lines share two points).
bool is_configuration(const IncidenceStructure& inc);

struct GirthResult {
    bool acyclic = false;
    int girth = 0;              ///< meaningful only when !acyclic
    std::vector<int> cycle;     ///< a shortest cycle, in order
};

/// Shortest cycle length via truncated BFS from every vertex.
GirthResult girth(const Graph& graph);

/// Bipartite point-line graph [[0, C], [C^T, 0]]; lines are offset by points().
Graph levi(const IncidenceStructure& inc);

/// Checks the equivalence girth(levi) >= 6 (or forest) <=> C4-free <=> J2-free.
bool girth_lemma_check(const IncidenceStructure& inc);

/// k when every vertex has degree k.
std::optional<int> regular_degree(const Graph& graph);

bool is_connected(const Graph& graph);

} // namespace zmu
