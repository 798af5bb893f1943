#include "zmu/semiplanes.hpp"

#include "zmu/error.hpp"
#include "zmu/galois.hpp"

#include <numeric>
#include <utility>

namespace zmu {
namespace {

// q = p^nu with p prime, or throws
std::pair<int, int> prime_power_split(int q) {
    if (q < 2) throw Error("prime power expected, got " + std::to_string(q));
    int p = q;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int nu = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++nu;
    }
    if (rest != 1) throw Error(std::to_string(q) + " is not a prime power");
    return {p, nu};
}

} // namespace

Scheme construct_L(int q, const LOptions& options) {
    if (q < 3) throw Error("construct_L: needs q >= 3");
    const auto [p, nu] = prime_power_split(q);
    const Field field = Field::build(p, nu, std::nullopt, options.generator);
    const int mu = q - 1;
    Scheme scheme(mu, q + 1, q + 1);
    const ResidueSet zero(mu, {0});
    for (int i = 0; i < q; ++i) {
        scheme.set_entry(i, q, zero);
        scheme.set_entry(q, i, zero);
        for (int j = 0; j < q; ++j) {
            if (i == j) continue;
            const int z = options.sign == DlogSign::minus
                              ? position_residue(field, field.sub(i, j))
                              : field.dlog(field.sub(i, j));
            scheme.set_entry(i, j, ResidueSet(mu, {z}));
        }
    }
    return scheme;
}

Scheme construct_C(int q, std::optional<int> generator) {
    const auto [p, nu] = prime_power_split(q);
    const Field field = Field::build(p, nu, std::nullopt, generator);
    const int side = q / p;  // p^(nu-1), the order of each position scheme
    Scheme scheme(p, q * side, q * side);
    for (int bi = 0; bi < q; ++bi)
        for (int bj = 0; bj < q; ++bj) {
            // quotient table bordered by a zero row and column
            const int element = (bi == q - 1 || bj == q - 1)
                                    ? 0
                                    : field.generator_power(bi - bj);
            const Scheme block = position_scheme(field, element);
            for (int i = 0; i < side; ++i)
                for (int j = 0; j < side; ++j)
                    if (!block.is_blank(i, j))
                        scheme.set_entry(bi * side + i, bj * side + j, block.set_at(i, j));
        }
    return scheme;
}

Scheme construct_C_mix(int q, std::optional<std::vector<int>> corner_perm) {
    if (q < 3) throw Error("construct_C_mix: needs q >= 3");
    const int mu = q - 1;
    std::vector<int> sigma(q);
    std::iota(sigma.begin(), sigma.end(), 0);
    if (corner_perm) {
        if (static_cast<int>(corner_perm->size()) != q)
            throw Error("construct_C_mix: corner permutation must have length q");
        std::vector<bool> seen(q, false);
        for (int v : *corner_perm) {
            if (v < 0 || v >= q || seen[v])
                throw Error("construct_C_mix: corner permutation is not a permutation");
            seen[v] = true;
        }
        sigma = *corner_perm;
    }

    const Scheme ell = construct_L(q);
    std::vector<int> row_heights(q + 1, mu), col_widths(q + 1, mu);
    row_heights[q] = q;
    col_widths[q] = q;
    Scheme scheme(mu, row_heights, col_widths);

    // core: L without its last row and column (blank diagonal survives)
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            if (!ell.is_blank(i, j)) scheme.set_entry(i, j, ell.set_at(i, j));

    // new line sigma(i) collects the parallel class of point row i, and the
    // new point j collects the parallel class of line column j; the corner
    // pairs new point r with new line sigma(r), legal because the diagonal
    // of the core is blank
    BinaryMatrix corner(q, q);
    for (int r = 0; r < q; ++r) corner.set(r, sigma[r], true);
    for (int i = 0; i < q; ++i) scheme.set_entry(i, q, ColSym{q, sigma[i] + 1});
    for (int j = 0; j < q; ++j) scheme.set_entry(q, j, RowSym{q, j + 1});
    scheme.set_entry(q, q, std::move(corner));
    return scheme;
}

bool is_elliptic_semiplane(const IncidenceStructure& inc) {
    if (!is_configuration(inc))
        throw Error("is_elliptic_semiplane: input is not a configuration");
    const BinaryMatrix& c = inc.incidence();
    const BinaryMatrix ct = c.transposed();
    const int m = inc.points();
    const int n = inc.lines();
    for (int point = 0; point < m; ++point)
        for (int line = 0; line < n; ++line) {
            if (c.get(point, line)) continue;
            int parallel_lines = 0;
            for (int l2 = 0; l2 < n && parallel_lines <= 1; ++l2)
                if (c.get(point, l2) && ct.row_intersection(line, l2) == 0)
                    ++parallel_lines;
            if (parallel_lines > 1) return false;
            int parallel_points = 0;
            for (int p2 = 0; p2 < m && parallel_points <= 1; ++p2)
                if (c.get(p2, line) && c.row_intersection(point, p2) == 0)
                    ++parallel_points;
            if (parallel_points > 1) return false;
        }
    return true;
}

} // namespace zmu
