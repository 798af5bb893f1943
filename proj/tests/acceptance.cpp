// Acceptance gate: runs the full verification suite once and folds its items
// into the headline claims, one pass/fail line per claim with a wall-time
// budget. Exits nonzero when any claim or any underlying item fails.

#include "zmu/search.hpp"

#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace {

struct Criterion {
    std::string label;
    std::vector<std::string> items;
    double budget_seconds;
};

const std::vector<Criterion> kCriteria = {
    {"Petersen scheme: 10-vertex 3-regular girth-5 blow-up equal to the dumbbell lift",
     {"cages/petersen", "catalog/petersen"},
     1.0},
    {"Cremona-Richmond scheme: J2-free (15_3) configuration, extraction round-trips",
     {"configurations/cremona_richmond", "catalog/cremona_richmond"},
     1.0},
    {"Reye scheme: J2-free (12_4, 16_3) configuration",
     {"configurations/reye", "catalog/reye"},
     1.0},
    {"T98 scheme: (98_10) configuration, J2-free by the difference criterion and the matrix scan",
     {"configurations/t98", "catalog/T98"},
     1.0},
    {"L construction at q=7, generator 3: pinned table cell for cell, J2-free, valency (7,7)",
     {"semiplanes/l6_table", "catalog/L6"},
     1.0},
    {"C construction for q in {2,3,4,5,8,9}: ((q^2)_q) J2-free schemes of order p^(2nu-1)",
     {"semiplanes/c_family"},
     30.0},
    {"Mixed closure for q in {3,4,5}: J2-free order q^2 valency q, isomorphic to C at q=5",
     {"semiplanes/c_mix"},
     10.0},
    {"T50 blow-up equals the Robertson Hoffman-Singleton graph: 50 vertices, 7-regular, girth 5",
     {"cages/hoffman_singleton", "catalog/T50"},
     1.0},
    {"T96 blow-up: 96 vertices, 9-regular, girth exactly 5 with the witness cycle verified",
     {"cages/t96", "catalog/T96"},
     5.0},
    {"Balbuena minors for q in {4,5,7,8,9}: orders q^2-q-1 and q^2-q-2, valency q-1, Levi girth >= 6",
     {"cages/balbuena"},
     30.0},
    {"Diagonal tables: four J2-free (30_5) fixtures with groups 360/72/36/18, star search "
     "classifies 4 classes, eta-zeta pairs as derived, (34_6) closures isomorphic with group 72",
     {"krcadinac/fixtures", "krcadinac/star_condition", "krcadinac/star_search",
      "krcadinac/eta_zeta"},
     180.0},
    {"(35_6) closures: group orders 360/72/36/18 survive, family partition invariant",
     {"krcadinac/closure_35", "krcadinac/families"},
     60.0},
    {"Census of (35_6) cyclic configurations: exactly 2 classes with groups 35 and 140",
     {"census/n35_k6"},
     180.0},
    {"Randomized property suites: criterion equivalence, round trips, skew/blow-up duality, "
     "girth lemma, group-order oracles, field tables, lifts, difference sets",
     {"properties/j2_equivalence", "properties/roundtrips", "properties/skew_blowup",
      "properties/girth_lemma", "properties/aut_reference", "properties/group_order",
      "properties/field_tables", "properties/voltage_lifts", "properties/dds_circulant"},
     120.0},
};

} // namespace

int main() {
    const zmu::VerifyReport report = zmu::verify_paper_suite();
    std::map<std::string, const zmu::VerifyItem*> by_name;
    for (const auto& item : report.items) by_name[item.name] = &item;

    std::size_t failed = 0;
    for (std::size_t i = 0; i < kCriteria.size(); ++i) {
        const Criterion& criterion = kCriteria[i];
        bool pass = true;
        double seconds = 0.0;
        std::string missing;
        for (const auto& name : criterion.items) {
            const auto found = by_name.find(name);
            if (found == by_name.end()) {
                pass = false;
                missing = name;
                continue;
            }
            pass = pass && found->second->pass;
            seconds += found->second->seconds;
        }
        const bool in_budget = seconds < criterion.budget_seconds;
        std::printf("[%s] %2zu. %s (%.2fs, budget %.0fs)\n",
                    pass && in_budget ? "PASS" : "FAIL", i + 1, criterion.label.c_str(),
                    seconds, criterion.budget_seconds);
        if (!pass) {
            ++failed;
            if (!missing.empty()) std::printf("        missing item: %s\n", missing.c_str());
            for (const auto& name : criterion.items) {
                const auto found = by_name.find(name);
                if (found != by_name.end() && !found->second->pass)
                    std::printf("        %s: %s\n", name.c_str(),
                                found->second->detail.c_str());
            }
        } else if (!in_budget) {
            ++failed;
        }
    }

    // Items outside the headline claims still gate the run.
    int extra_failures = 0;
    for (const auto& item : report.items)
        if (!item.pass) {
            bool mapped = false;
            for (const auto& criterion : kCriteria)
                for (const auto& name : criterion.items)
                    if (name == item.name) mapped = true;
            if (!mapped) {
                std::printf("[FAIL] supporting check %s: %s\n", item.name.c_str(),
                            item.detail.c_str());
                ++extra_failures;
            }
        }

    std::printf("%zu of %zu criteria passed", kCriteria.size() - failed, kCriteria.size());
    if (extra_failures) std::printf(", %d supporting checks failed", extra_failures);
    std::printf("\n");
    return failed == 0 && extra_failures == 0 ? 0 : 1;
}
