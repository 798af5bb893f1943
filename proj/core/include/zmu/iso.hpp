#pragma once

#include "zmu/graphs.hpp"

#include <cstdint>
#include <vector>

namespace zmu {

/// Ordered partition of graph vertices into color classes.
struct Coloring {
    std::vector<std::vector<int>> classes;
};

/// Canonical labeling of a vertex-colored graph via individualization and
/// refinement. labeling[v] is the canonical position of vertex v; generators
/// are color-preserving automorphisms discovered along the way, guaranteed to
/// generate the full color-preserving automorphism group.
struct CanonResult {
    std::vector<int> labeling;
    std::vector<std::vector<int>> generators;
    std::vector<std::uint64_t> certificate;
};

CanonResult canonize_colored(const Graph& graph, const Coloring& coloring);

/// Exact order of the permutation group generated by the given permutations
/// (Schreier-Sims).
std::uint64_t permutation_group_order(int degree, const std::vector<std::vector<int>>& generators);

/// Canonical incidence matrix: the same output for any pair of structures
/// related by independent point and line permutations. Computed on the Levi
/// graph with points and lines as separate color classes.
BinaryMatrix canonical_form(const IncidenceStructure& inc);

bool are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b);

/// Automorphisms are pairs of a point and a line permutation; dualities are
/// not counted. Generators permute Levi vertices (points first, then lines
/// offset by points()).
struct AutReport {
    std::uint64_t order = 1;
    std::vector<std::vector<int>> generators;
    std::vector<int> orbit;  ///< orbit representative per Levi vertex
};

AutReport aut_order(const IncidenceStructure& inc);

/// Diagnostic: group order when point-line swaps are permitted (square
/// structures); equals aut_order(inc).order when points() != lines().
std::uint64_t extended_aut_order(const IncidenceStructure& inc);

/// True when every generator of the automorphism group maps each point family
/// onto a point family and each line family onto a line family (setwise).
/// Families must partition the points resp. lines; otherwise Error.
bool family_invariance(const IncidenceStructure& inc,
                       const std::vector<std::vector<int>>& point_families,
                       const std::vector<std::vector<int>>& line_families);

} // namespace zmu
