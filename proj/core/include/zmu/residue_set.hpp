#pragma once

#include <string>
#include <vector>

namespace zmu {

/// Reduces value into [0, modulus).
int mod_reduce(long long value, int modulus);

/// A subset of Z_mu. Members are kept reduced, sorted and duplicate-free.
class ResidueSet {
public:
    explicit ResidueSet(int modulus);
    ResidueSet(int modulus, const std::vector<int>& members);

    int modulus() const { return modulus_; }
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int r) const;

    /// { -x mod mu : x in this }
    ResidueSet negated() const;

    bool operator==(const ResidueSet&) const = default;

    /// "1,4"; the empty set prints as "-".
    std::string to_string() const;

private:
    int modulus_;
    std::vector<int> members_;
};

/// Outcome of the deficient-difference-set test: a k-set is accepted when its
/// k^2 - k pairwise differences are pairwise distinct.
struct DifferenceSetReport {
    bool is_dds = false;
    std::vector<int> covered;  ///< distinct nonzero residues hit by some difference
    int deficiency = 0;        ///< mu - k^2 + k - 1; meaningful only when is_dds
};

DifferenceSetReport dds_check(const ResidueSet& set);

} // namespace zmu
