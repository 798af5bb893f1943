#pragma once

#include "zmu/binary_matrix.hpp"
#include "zmu/catalog.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zmu {

struct SearchClass {
    BinaryMatrix canonical_form;
    std::string representative;  ///< first survivor landing in the class
    std::uint64_t aut_order = 0;
    std::size_t member_count = 0;
};

struct SearchReport {
    std::uint64_t candidates = 0;
    std::uint64_t survivors = 0;
    std::vector<SearchClass> classes;          ///< in order of first appearance
    std::vector<std::pair<int, int>> pairs;    ///< surviving (eta, zeta) pairs
    double wall_seconds = 0.0;
};

/// All 3^10 diagonal choices (alpha, beta) for krcadinac_T, filtered by the
/// J2-freeness condition alpha_i + beta_j != 0 (i != j), classified up to
/// isomorphism of the (30_5) blow-ups.
SearchReport search_star_solutions();

/// All 9 pairs (eta, zeta) for krcadinac_V_prime over the given T. Survivors
/// must blow up to a J2-free (34_6), i.e. also keep valency 6 (which rules
/// out eta = alpha_5 and zeta = beta_5).
SearchReport search_eta_zeta(const KrcadinacParams& t_params);

/// Cyclic configurations (n_k): enumerate k-subsets of Z_n containing 0,
/// filter by dds_check, classify up to isomorphism. Requires the existence
/// bound k^2 - k + 1 <= n.
SearchReport census_cyclic(int n, int k);

struct VerifyItem {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_pass() const;
};

/// Runs every catalog expectation and every acceptance criterion, including
/// the randomized property suites (seeded; >= 1000 cases each).
VerifyReport verify_paper_suite(std::uint64_t seed = 20260819);

} // namespace zmu
