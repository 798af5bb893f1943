#pragma once

#include "zmu/graphs.hpp"
#include "zmu/scheme.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zmu {

/// Facts a named scheme is expected to satisfy. Cheap ones (sizes, valency,
/// J2-freeness, girth) are verified when the fixture is materialized; the
/// automorphism-group orders are asserted by the verification suite.
struct ExpectedProperties {
    int blowup_rows = 0;
    int blowup_cols = 0;
    std::optional<std::pair<int, int>> valency;
    bool j2_free = true;
    std::optional<int> girth;  ///< of the blow-up read as a graph adjacency
    std::optional<std::uint64_t> aut_order;
};

struct NamedScheme {
    std::string name;
    Scheme scheme;
    ExpectedProperties expected;
};

/// Fixture lookup. Names: petersen, cremona_richmond, reye, T98, T50, T96,
/// affine_9_4_12_3, L6, fln35. Throws Error for unknown names.
const NamedScheme& named(const std::string& name);
std::vector<std::string> named_scheme_names();

/// Hoffman-Singleton adjacency from the pentagon-pentagram description:
/// pentagrams P_j, pentagons Q_k, vertex i of P_j joined to vertex
/// i + jk (mod 5) of Q_k; blocks ordered P_1..P_4, P_0, Q_1..Q_4, Q_0.
/// Independent of the T50 scheme fixture.
BinaryMatrix robertson_hs();

enum class BalbuenaVariant { M, N };

/// Mixed scheme of blow-up order q^2-q-1 (M) or q^2-q-2 (N) and valency q-1,
/// obtained from L^(q-1) by deleting its first two rows and the first and
/// last (M) or last two (N) columns, then closing with c/r symbols.
/// Requires prime power q >= 4.
Scheme balbuena_minor(int q, BalbuenaVariant variant);

struct KrcadinacParams {
    std::array<int, 5> alpha{};
    std::array<int, 5> beta{};
};

/// 10 x 10 scheme over Z_3: diagonal alpha_1..alpha_5, beta_1..beta_5, an
/// L^(3) block upper right and its negated transpose lower left. J2-free
/// exactly when alpha_i + beta_j != 0 (mod 3) for all i != j.
Scheme krcadinac_T(const KrcadinacParams& params);

/// The four classified parameter choices: T360, T72, T36, T18 (named by the
/// order of the automorphism group of the resulting (30_5) configuration).
KrcadinacParams krcadinac_named_params(const std::string& which);
std::vector<std::string> krcadinac_param_names();

/// T conjugated by the row/column order 0,5,1,6,2,7,3,8,4,9: consecutive row
/// and column pairs become non-overlapping. Error if some pair overlaps.
Scheme krcadinac_V(const Scheme& t);

/// V(T) with diagonal entries widened to {alpha_5, eta}, {beta_5, zeta} and
/// the first four row/column pairs closed with c^4/r^4 symbols (blank
/// corner): an 11 x 11 mixed scheme with blow-up order 34.
Scheme krcadinac_V_prime(const Scheme& t, int eta, int zeta);

/// V(T) with all five row/column pairs closed with c^5/r^5 symbols (blank
/// corner): blow-up order 35, valency 6.
Scheme krcadinac_35(const Scheme& t);

/// Point classes Pi_l and line classes Lambda_l of blow_up(V(T)): consecutive
/// index ranges {6(l-1), ..., 6l-1} for l = 1..5.
struct KrcadinacFamilies {
    std::vector<std::vector<int>> point_families;
    std::vector<std::vector<int>> line_families;
};
KrcadinacFamilies krcadinac_families();

/// Incidence of the cyclic configuration with base line D: the blow-up of the
/// 1 x 1 scheme [D], i.e. circulant(n, D). Requires dds_check(D) to pass.
IncidenceStructure cyclic_config(const ResidueSet& base);

} // namespace zmu
