#pragma once

#include "zmu/binary_matrix.hpp"
#include "zmu/residue_set.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace zmu {

struct Blank {
    bool operator==(const Blank&) const = default;
};

/// The symbol r^s_i: an s x mu block whose i-th row is all ones. The index i
/// is 1-based, matching the printed symbols; everything positional is 0-based.
struct RowSym {
    int height = 0;
    int index = 1;
    bool operator==(const RowSym&) const = default;
};

/// The symbol c^s_i = transpose of r^s_i: a mu x s block whose i-th column is
/// all ones. The index is 1-based.
struct ColSym {
    int width = 0;
    int index = 1;
    bool operator==(const ColSym&) const = default;
};

/// One cell of a scheme. ResidueSet cells blow up to circulants; RowSym,
/// ColSym and raw BinaryMatrix cells make a scheme "mixed".
using SchemeEntry = std::variant<Blank, ResidueSet, RowSym, ColSym, BinaryMatrix>;

/// An m x n array of entries over Z_mu. Every row has a blow-up height and
/// every column a blow-up width (mu unless a symbol or raw block says
/// otherwise); set_entry validates an entry against them.
class Scheme {
public:
    Scheme(int modulus, int rows, int cols);
    Scheme(int modulus, std::vector<int> row_heights, std::vector<int> col_widths);

    /// Pure scheme from a grid of cells; std::nullopt means blank.
    using CellSpec = std::optional<std::vector<int>>;
    static Scheme pure(int modulus, const std::vector<std::vector<CellSpec>>& grid);

    int modulus() const { return modulus_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int row_height(int i) const { return row_heights_[i]; }
    int col_width(int j) const { return col_widths_[j]; }
    const std::vector<int>& row_heights() const { return row_heights_; }
    const std::vector<int>& col_widths() const { return col_widths_; }
    int blowup_rows() const;
    int blowup_cols() const;

    const SchemeEntry& entry(int i, int j) const { return entries_[idx(i, j)]; }
    void set_entry(int i, int j, SchemeEntry entry);

    /// Convenience for pure cells; throws if the entry is not Blank/ResidueSet.
    const ResidueSet& set_at(int i, int j) const;
    bool is_blank(int i, int j) const;

    /// Only Blank and ResidueSet entries, all heights and widths equal to mu.
    bool is_pure() const;
    bool is_square() const { return rows_ == cols_; }

    bool operator==(const Scheme&) const = default;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

    int modulus_;
    int rows_;
    int cols_;
    std::vector<int> row_heights_;
    std::vector<int> col_widths_;
    std::vector<SchemeEntry> entries_;
};

/// mu x mu matrix with entry (i,j) = 1 iff (j - i) mod mu is in the set.
BinaryMatrix circulant(int modulus, const ResidueSet& set);

/// Inverse of circulant; throws Error if the matrix is not a circulant.
ResidueSet circulant_inverse(const BinaryMatrix& matrix);

/// Replace every entry by its block and concatenate.
BinaryMatrix blow_up(const Scheme& scheme);

struct ExtractFailure {
    int block_row = 0;
    int block_col = 0;
};

/// Cut the matrix into mu x mu blocks and read each back as a circulant.
/// Returns the offending block position when some block is not a circulant.
/// Throws Error when the dimensions are not multiples of mu.
std::variant<Scheme, ExtractFailure> extract_scheme(const BinaryMatrix& matrix, int modulus);

/// (k, l) when every blow-up row sums to k and every column to l.
std::optional<std::pair<int, int>> valency(const Scheme& scheme);

struct MatrixJ2Witness {
    int row1 = 0, row2 = 0, col1 = 0, col2 = 0;
};

struct MatrixJ2Result {
    bool j2_free = true;
    std::optional<MatrixJ2Witness> witness;  ///< lexicographically first violation
};

/// A matrix is J2-free when it has no 2 x 2 all-ones submatrix. Runs in
/// O(rows^2) row-pair intersections.
MatrixJ2Result is_j2_free_matrix(const BinaryMatrix& matrix);

/// A violating quadruple of entries: a in S_ij, b in S_ih, c in S_gh,
/// d in S_gj with a - b + c - d = 0 (mod mu) and the blow-up positions it
/// stands for pairwise distinct.
struct SchemeJ2Witness {
    int i = 0, g = 0, j = 0, h = 0;
    int a = 0, b = 0, c = 0, d = 0;
};

struct SchemeJ2Result {
    bool j2_free = true;
    std::optional<SchemeJ2Witness> witness;
};

/// Difference-collision test equivalent to is_j2_free_matrix(blow_up(S)).
/// Pure schemes only; mixed entries are rejected with Error (use the matrix
/// test on the blow-up instead).
SchemeJ2Result is_j2_free_scheme(const Scheme& scheme);

/// Entry (j,i) of the result is -S_ij. Pure schemes only.
Scheme scheme_transpose_negate(const Scheme& scheme);

/// S_ji == -S_ij for all i, j. Pure square schemes only.
bool is_skew_symmetric(const Scheme& scheme);

/// Skew-symmetric with 0 in no diagonal entry; blow-up is then a graph
/// adjacency matrix.
bool is_admissible(const Scheme& scheme);

/// [[O, S], [-S^T, O]] of order (m + n); admissible by construction.
Scheme bipartite_double(const Scheme& scheme);

} // namespace zmu
