#include "zmu/residue_set.hpp"

#include "zmu/error.hpp"

#include <algorithm>

namespace zmu {

int mod_reduce(long long value, int modulus) {
    long long r = value % modulus;
    if (r < 0) r += modulus;
    return static_cast<int>(r);
}

ResidueSet::ResidueSet(int modulus) : modulus_(modulus) {
    if (modulus < 1) throw Error("ResidueSet: modulus must be positive");
}

ResidueSet::ResidueSet(int modulus, const std::vector<int>& members) : ResidueSet(modulus) {
    members_.reserve(members.size());
    for (int m : members) members_.push_back(mod_reduce(m, modulus));
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ResidueSet::contains(int r) const {
    return std::binary_search(members_.begin(), members_.end(), mod_reduce(r, modulus_));
}

ResidueSet ResidueSet::negated() const {
    std::vector<int> neg;
    neg.reserve(members_.size());
    for (int m : members_) neg.push_back(modulus_ - m);
    return ResidueSet(modulus_, neg);
}

std::string ResidueSet::to_string() const {
    if (members_.empty()) return "-";
    std::string out;
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(members_[k]);
    }
    return out;
}

DifferenceSetReport dds_check(const ResidueSet& set) {
    const int mu = set.modulus();
    const auto& m = set.members();
    const int k = set.size();

    std::vector<int> count(mu, 0);
    for (int a : m)
        for (int b : m)
            if (a != b) ++count[mod_reduce(a - b, mu)];

    DifferenceSetReport report;
    for (int v = 1; v < mu; ++v)
        if (count[v] > 0) report.covered.push_back(v);
    const long long pairs = static_cast<long long>(k) * (k - 1);
    report.is_dds = pairs == static_cast<long long>(report.covered.size());
    if (report.is_dds) report.deficiency = mu - k * k + k - 1;
    return report;
}

} // namespace zmu
