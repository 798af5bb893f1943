#include "zmu/binary_matrix.hpp"

#include "zmu/error.hpp"

#include <bit>

namespace zmu {

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error("BinaryMatrix: negative dimension");
    wpr_ = (cols + 63) / 64;
    words_.assign(static_cast<std::size_t>(rows) * wpr_, 0);
}

BinaryMatrix BinaryMatrix::identity(int n) {
    BinaryMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    BinaryMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw Error("BinaryMatrix: ragged rows");
        for (int j = 0; j < c; ++j) {
            const char ch = rows[i][j];
            if (ch != '0' && ch != '1') throw Error("BinaryMatrix: rows must be 0/1 digits");
            if (ch == '1') m.set(i, j, true);
        }
    }
    return m;
}

int BinaryMatrix::row_sum(int i) const {
    int s = 0;
    for (auto w : row_words(i)) s += std::popcount(w);
    return s;
}

int BinaryMatrix::col_sum(int j) const {
    int s = 0;
    for (int i = 0; i < rows_; ++i) s += get(i, j);
    return s;
}

long long BinaryMatrix::total_ones() const {
    long long s = 0;
    for (auto w : words_) s += std::popcount(w);
    return s;
}

int BinaryMatrix::row_intersection(int i, int k) const {
    const auto a = row_words(i);
    const auto b = row_words(k);
    int s = 0;
    for (int w = 0; w < wpr_; ++w) s += std::popcount(a[w] & b[w]);
    return s;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

} // namespace zmu
