#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zmu {

/// Dense 0/1 matrix with bit-packed rows. Unused tail bits of each row word
/// block are kept zero, so whole-row word operations are safe.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);

    static BinaryMatrix identity(int n);
    /// Rows given as strings of '0'/'1' digits, all the same length.
    static BinaryMatrix from_rows(const std::vector<std::string>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int i, int j) const {
        return (words_[static_cast<std::size_t>(i) * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(int i, int j, bool value) {
        auto& w = words_[static_cast<std::size_t>(i) * wpr_ + (j >> 6)];
        const std::uint64_t bit = std::uint64_t{1} << (j & 63);
        if (value) w |= bit; else w &= ~bit;
    }

    int row_sum(int i) const;
    int col_sum(int j) const;
    long long total_ones() const;

    /// Number of columns where both rows carry a 1.
    int row_intersection(int i, int k) const;

    BinaryMatrix transposed() const;

    std::span<const std::uint64_t> row_words(int i) const {
        return {words_.data() + static_cast<std::size_t>(i) * wpr_, static_cast<std::size_t>(wpr_)};
    }
    int words_per_row() const { return wpr_; }

    bool operator==(const BinaryMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    int wpr_ = 0;  // words per row
    std::vector<std::uint64_t> words_;
};

} // namespace zmu
