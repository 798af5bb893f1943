#include "zmu/scheme.hpp"

#include "zmu/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zmu {

namespace {

std::string cell_name(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

Scheme::Scheme(int modulus, int rows, int cols)
    : Scheme(modulus, std::vector<int>(rows, modulus), std::vector<int>(cols, modulus)) {}

Scheme::Scheme(int modulus, std::vector<int> row_heights, std::vector<int> col_widths)
    : modulus_(modulus),
      rows_(static_cast<int>(row_heights.size())),
      cols_(static_cast<int>(col_widths.size())),
      row_heights_(std::move(row_heights)),
      col_widths_(std::move(col_widths)) {
    if (modulus < 1) throw Error("Scheme: modulus must be positive");
    for (int h : row_heights_)
        if (h < 1) throw Error("Scheme: row heights must be positive");
    for (int w : col_widths_)
        if (w < 1) throw Error("Scheme: column widths must be positive");
    entries_.assign(static_cast<std::size_t>(rows_) * cols_, Blank{});
}

Scheme Scheme::pure(int modulus, const std::vector<std::vector<CellSpec>>& grid) {
    const int m = static_cast<int>(grid.size());
    const int n = m ? static_cast<int>(grid[0].size()) : 0;
    Scheme s(modulus, m, n);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(grid[i].size()) != n) throw Error("Scheme::pure: ragged grid");
        for (int j = 0; j < n; ++j)
            if (grid[i][j]) s.set_entry(i, j, ResidueSet(modulus, *grid[i][j]));
    }
    return s;
}

void Scheme::set_entry(int i, int j, SchemeEntry entry) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("Scheme: entry out of range");
    const int h = row_heights_[i];
    const int w = col_widths_[j];
    if (const auto* set = std::get_if<ResidueSet>(&entry)) {
        if (set->modulus() != modulus_)
            throw Error("Scheme: residue set modulus mismatch at " + cell_name(i, j));
        if (h != modulus_ || w != modulus_)
            throw Error("Scheme: residue set needs a mu x mu cell at " + cell_name(i, j));
    } else if (const auto* r = std::get_if<RowSym>(&entry)) {
        if (r->height != h || w != modulus_)
            throw Error("Scheme: r-symbol shape mismatch at " + cell_name(i, j));
        if (r->index < 1 || r->index > r->height)
            throw Error("Scheme: r-symbol index out of range at " + cell_name(i, j));
    } else if (const auto* c = std::get_if<ColSym>(&entry)) {
        if (c->width != w || h != modulus_)
            throw Error("Scheme: c-symbol shape mismatch at " + cell_name(i, j));
        if (c->index < 1 || c->index > c->width)
            throw Error("Scheme: c-symbol index out of range at " + cell_name(i, j));
    } else if (const auto* b = std::get_if<BinaryMatrix>(&entry)) {
        if (b->rows() != h || b->cols() != w)
            throw Error("Scheme: raw block shape mismatch at " + cell_name(i, j));
    }
    entries_[idx(i, j)] = std::move(entry);
}

const ResidueSet& Scheme::set_at(int i, int j) const {
    const auto* set = std::get_if<ResidueSet>(&entry(i, j));
    if (!set) throw Error("Scheme: entry " + cell_name(i, j) + " is not a residue set");
    return *set;
}

bool Scheme::is_blank(int i, int j) const {
    return std::holds_alternative<Blank>(entry(i, j));
}

bool Scheme::is_pure() const {
    for (int h : row_heights_)
        if (h != modulus_) return false;
    for (int w : col_widths_)
        if (w != modulus_) return false;
    for (const auto& e : entries_)
        if (!std::holds_alternative<Blank>(e) && !std::holds_alternative<ResidueSet>(e))
            return false;
    return true;
}

int Scheme::blowup_rows() const {
    return std::accumulate(row_heights_.begin(), row_heights_.end(), 0);
}

int Scheme::blowup_cols() const {
    return std::accumulate(col_widths_.begin(), col_widths_.end(), 0);
}

BinaryMatrix circulant(int modulus, const ResidueSet& set) {
    if (set.modulus() != modulus) throw Error("circulant: modulus mismatch");
    BinaryMatrix m(modulus, modulus);
    for (int i = 0; i < modulus; ++i)
        for (int c : set.members()) m.set(i, mod_reduce(i + c, modulus), true);
    return m;
}

ResidueSet circulant_inverse(const BinaryMatrix& matrix) {
    const int mu = matrix.rows();
    if (matrix.cols() != mu) throw Error("circulant_inverse: matrix not square");
    if (mu == 0) throw Error("circulant_inverse: empty matrix");
    std::vector<int> members;
    for (int j = 0; j < mu; ++j)
        if (matrix.get(0, j)) members.push_back(j);
    ResidueSet set(mu, members);
    for (int i = 1; i < mu; ++i)
        for (int j = 0; j < mu; ++j)
            if (matrix.get(i, j) != set.contains(j - i))
                throw Error("circulant_inverse: not a circulant (row " + std::to_string(i) + ")");
    return set;
}

BinaryMatrix blow_up(const Scheme& scheme) {
    const int mu = scheme.modulus();
    BinaryMatrix out(scheme.blowup_rows(), scheme.blowup_cols());
    int r0 = 0;
    for (int i = 0; i < scheme.rows(); ++i) {
        int c0 = 0;
        for (int j = 0; j < scheme.cols(); ++j) {
            const auto& e = scheme.entry(i, j);
            if (const auto* set = std::get_if<ResidueSet>(&e)) {
                for (int r = 0; r < mu; ++r)
                    for (int c : set->members()) out.set(r0 + r, c0 + mod_reduce(r + c, mu), true);
            } else if (const auto* rs = std::get_if<RowSym>(&e)) {
                for (int c = 0; c < mu; ++c) out.set(r0 + rs->index - 1, c0 + c, true);
            } else if (const auto* cs = std::get_if<ColSym>(&e)) {
                for (int r = 0; r < mu; ++r) out.set(r0 + r, c0 + cs->index - 1, true);
            } else if (const auto* b = std::get_if<BinaryMatrix>(&e)) {
                for (int r = 0; r < b->rows(); ++r)
                    for (int c = 0; c < b->cols(); ++c)
                        if (b->get(r, c)) out.set(r0 + r, c0 + c, true);
            }
            c0 += scheme.col_width(j);
        }
        r0 += scheme.row_height(i);
    }
    return out;
}

std::variant<Scheme, ExtractFailure> extract_scheme(const BinaryMatrix& matrix, int modulus) {
    if (modulus < 1) throw Error("extract_scheme: modulus must be positive");
    if (matrix.rows() % modulus != 0 || matrix.cols() % modulus != 0)
        throw Error("extract_scheme: dimensions not divisible by modulus");
    const int m = matrix.rows() / modulus;
    const int n = matrix.cols() / modulus;
    Scheme scheme(modulus, m, n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const int r0 = i * modulus;
            const int c0 = j * modulus;
            std::vector<int> members;
            for (int c = 0; c < modulus; ++c)
                if (matrix.get(r0, c0 + c)) members.push_back(c);
            ResidueSet set(modulus, members);
            for (int r = 1; r < modulus; ++r)
                for (int c = 0; c < modulus; ++c)
                    if (matrix.get(r0 + r, c0 + c) != set.contains(c - r))
                        return ExtractFailure{i, j};
            if (!set.empty()) scheme.set_entry(i, j, std::move(set));
        }
    }
    return scheme;
}

std::optional<std::pair<int, int>> valency(const Scheme& scheme) {
    const BinaryMatrix b = blow_up(scheme);
    if (b.rows() == 0 || b.cols() == 0) return std::nullopt;
    const int k = b.row_sum(0);
    for (int i = 1; i < b.rows(); ++i)
        if (b.row_sum(i) != k) return std::nullopt;
    const int l = b.col_sum(0);
    for (int j = 1; j < b.cols(); ++j)
        if (b.col_sum(j) != l) return std::nullopt;
    return std::make_pair(k, l);
}

MatrixJ2Result is_j2_free_matrix(const BinaryMatrix& matrix) {
    const int wpr = matrix.words_per_row();
    for (int i = 0; i + 1 < matrix.rows(); ++i) {
        const auto a = matrix.row_words(i);
        for (int k = i + 1; k < matrix.rows(); ++k) {
            const auto b = matrix.row_words(k);
            int hits = 0;
            for (int w = 0; w < wpr; ++w) hits += std::popcount(a[w] & b[w]);
            if (hits < 2) continue;
            MatrixJ2Witness wit{i, k, -1, -1};
            for (int w = 0; w < wpr && wit.col2 < 0; ++w) {
                std::uint64_t both = a[w] & b[w];
                while (both) {
                    const int j = w * 64 + std::countr_zero(both);
                    both &= both - 1;
                    if (wit.col1 < 0) {
                        wit.col1 = j;
                    } else {
                        wit.col2 = j;
                        break;
                    }
                }
            }
            return {false, wit};
        }
    }
    return {true, std::nullopt};
}

namespace {

// First occurrence of a difference value within one block-row pair; epoch
// stamps avoid clearing the table between pairs.
struct Occurrence {
    int epoch = -1;
    int col = 0, a = 0, d = 0;
};

} // namespace

SchemeJ2Result is_j2_free_scheme(const Scheme& scheme) {
    if (!scheme.is_pure())
        throw Error("is_j2_free_scheme: mixed entries present; test the blow-up with "
                    "is_j2_free_matrix instead");
    const int mu = scheme.modulus();
    std::vector<Occurrence> seen(mu);
    int epoch = 0;
    for (int i = 0; i < scheme.rows(); ++i) {
        for (int g = i; g < scheme.rows(); ++g) {
            ++epoch;
            for (int j = 0; j < scheme.cols(); ++j) {
                const auto& top = scheme.entry(i, j);
                const auto& bot = scheme.entry(g, j);
                const auto* ts = std::get_if<ResidueSet>(&top);
                const auto* bs = std::get_if<ResidueSet>(&bot);
                if (!ts || !bs) continue;
                for (int a : ts->members()) {
                    for (int d : bs->members()) {
                        // i == g demands distinct local rows, i.e. a != d.
                        if (i == g && a == d) continue;
                        const int v = mod_reduce(a - d, mu);
                        Occurrence& occ = seen[v];
                        if (occ.epoch == epoch) {
                            // two occurrences of the same difference: a J2
                            SchemeJ2Witness wit;
                            wit.i = i;
                            wit.g = g;
                            wit.j = occ.col;
                            wit.h = j;
                            wit.a = occ.a;
                            wit.b = a;
                            wit.c = d;
                            wit.d = occ.d;
                            return {false, wit};
                        }
                        occ = {epoch, j, a, d};
                    }
                }
            }
        }
    }
    return {true, std::nullopt};
}

Scheme scheme_transpose_negate(const Scheme& scheme) {
    if (!scheme.is_pure()) throw Error("scheme_transpose_negate: pure schemes only");
    Scheme out(scheme.modulus(), scheme.cols(), scheme.rows());
    for (int i = 0; i < scheme.rows(); ++i)
        for (int j = 0; j < scheme.cols(); ++j)
            if (!scheme.is_blank(i, j)) out.set_entry(j, i, scheme.set_at(i, j).negated());
    return out;
}

bool is_skew_symmetric(const Scheme& scheme) {
    if (!scheme.is_pure()) throw Error("is_skew_symmetric: pure schemes only");
    if (!scheme.is_square()) throw Error("is_skew_symmetric: square schemes only");
    for (int i = 0; i < scheme.rows(); ++i) {
        for (int j = i; j < scheme.cols(); ++j) {
            const bool blank_ij = scheme.is_blank(i, j);
            const bool blank_ji = scheme.is_blank(j, i);
            if (blank_ij != blank_ji) return false;
            if (blank_ij) continue;
            if (scheme.set_at(j, i) != scheme.set_at(i, j).negated()) return false;
        }
    }
    return true;
}

bool is_admissible(const Scheme& scheme) {
    if (!is_skew_symmetric(scheme)) return false;
    for (int i = 0; i < scheme.rows(); ++i)
        if (!scheme.is_blank(i, i) && scheme.set_at(i, i).contains(0)) return false;
    return true;
}

Scheme bipartite_double(const Scheme& scheme) {
    if (!scheme.is_pure()) throw Error("bipartite_double: pure schemes only");
    const int m = scheme.rows();
    const int n = scheme.cols();
    Scheme out(scheme.modulus(), m + n, m + n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            if (scheme.is_blank(i, j)) continue;
            const auto& set = scheme.set_at(i, j);
            out.set_entry(i, m + j, set);
            out.set_entry(m + j, i, set.negated());
        }
    }
    return out;
}

} // namespace zmu
