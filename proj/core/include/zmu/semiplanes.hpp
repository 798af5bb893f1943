#pragma once

#include "zmu/graphs.hpp"
#include "zmu/scheme.hpp"

#include <optional>
#include <vector>

namespace zmu {

/// Whether the logarithm entering construct_L is negated. The printed
/// classical tables use `minus` (entry (i,j) is the position residue of
/// x_i - x_j in the quotient table), which is the default.
enum class DlogSign { plus, minus };

struct LOptions {
    std::optional<int> generator;       ///< defaults to the field's canonical generator
    DlogSign sign = DlogSign::minus;
};

/// L^(q-1): scheme of order q+1 over Z_{q-1}. Off-diagonal entry (i,j) for
/// i,j < q is {sign * dlog(x_i - x_j)}; the last row and column are {0} with a
/// blank corner; the diagonal is blank. Blow-up is a ((q^2-1)_q) elliptic
/// semiplane. Requires prime power q >= 3.
Scheme construct_L(int q, const LOptions& options = {});

/// C^(p): scheme of order p^(2nu-1) over Z_p for q = p^nu. The quotient table
/// bordered by a zero row and column is replaced blockwise by position
/// schemes. Blow-up is a ((q^2)_q) elliptic semiplane. Requires prime power
/// q >= 2.
Scheme construct_C(int q, std::optional<int> generator = std::nullopt);

/// Mixed closure of L^(q-1) minus its last row and column: column symbols
/// c^q, row symbols r^q and a permutation-matrix corner. The default corner is
/// the identity; a custom corner permutation sigma places new point r on new
/// line sigma(r) and relabels the column symbols accordingly. Blow-up is a
/// ((q^2)_q) semiplane. Requires prime power q >= 3.
Scheme construct_C_mix(int q, std::optional<std::vector<int>> corner_perm = std::nullopt);

/// Axiom check: for every non-incident point-line pair (P, L) there is at
/// most one line through P disjoint from L, and dually. Requires a
/// configuration (constant degrees, J2-free); otherwise Error.
bool is_elliptic_semiplane(const IncidenceStructure& inc);

} // namespace zmu
