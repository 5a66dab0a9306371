#pragma once

// Bit-packed linear algebra over GF(2).
//
// Matrices store one 64-bit word per row (column c lives in bit c), which
// caps the width at 64 columns; that is all this project needs. Rank is
// maintained through an echelon basis: a set of independent rows with
// pairwise distinct lowest set bits ("pivots"). Rows are not back-reduced
// against later pivots; distinct pivots alone make membership tests and
// insertions cost at most one XOR per stored row.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace persym {

using word = std::uint64_t;

inline constexpr int kMaxCols = 64;

/// Dense boolean matrix, one word per row, at most 64 columns.
class GF2Matrix {
public:
    GF2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (cols < 1 || cols > kMaxCols)
            throw std::invalid_argument("GF2Matrix: cols must be in 1..64, got " +
                                        std::to_string(cols));
        if (rows < 0) throw std::invalid_argument("GF2Matrix: negative row count");
        row_words_.assign(static_cast<std::size_t>(rows), 0);
    }

    static GF2Matrix from_rows(const std::vector<word>& rows, int cols) {
        GF2Matrix m(static_cast<int>(rows.size()), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // Mask of the valid column bits.
    word col_mask() const { return cols_ == kMaxCols ? ~word(0) : (word(1) << cols_) - 1; }

    word row(int r) const { return row_words_[check_row(r)]; }

    void set_row(int r, word bits) {
        if ((bits & ~col_mask()) != 0)
            throw std::invalid_argument("GF2Matrix: row word has bits beyond the last column");
        row_words_[check_row(r)] = bits;
    }

    bool get(int r, int c) const { return (row_words_[check_row(r)] >> check_col(c)) & 1; }

    void set(int r, int c, bool v) {
        word bit = word(1) << check_col(c);
        if (v)
            row_words_[check_row(r)] |= bit;
        else
            row_words_[check_row(r)] &= ~bit;
    }

    bool operator==(const GF2Matrix&) const = default;

private:
    std::size_t check_row(int r) const {
        if (r < 0 || r >= rows_) throw std::out_of_range("GF2Matrix: row index");
        return static_cast<std::size_t>(r);
    }
    int check_col(int c) const {
        if (c < 0 || c >= cols_) throw std::out_of_range("GF2Matrix: column index");
        return c;
    }

    int rows_, cols_;
    std::vector<word> row_words_;
};

/// Growable echelon basis of a row space. Stored rows have pairwise distinct
/// lowest set bits and are kept sorted by pivot column, so the row owning a
/// given pivot sits at index popcount(pivot_mask & (pivot_bit - 1)).
///
/// Storage is a fixed inline array; copies transfer only the live prefix.
/// This keeps tree searches allocation-free.
class EchelonBasis {
public:
    explicit EchelonBasis(int width) : width_(width) {
        if (width < 1 || width > kMaxCols)
            throw std::invalid_argument("EchelonBasis: width must be in 1..64");
    }

    EchelonBasis(const EchelonBasis& o)
        : pivot_mask_(o.pivot_mask_), size_(o.size_), width_(o.width_) {
        for (int i = 0; i < size_; ++i) rows_[i] = o.rows_[i];
    }

    EchelonBasis& operator=(const EchelonBasis& o) {
        pivot_mask_ = o.pivot_mask_;
        size_ = o.size_;
        width_ = o.width_;
        for (int i = 0; i < size_; ++i) rows_[i] = o.rows_[i];
        return *this;
    }

    int width() const { return width_; }
    int size() const { return size_; }
    word pivot_mask() const { return pivot_mask_; }

    // i-th stored row in pivot-column order.
    word pivot_row(int i) const {
        if (i < 0 || i >= size_) throw std::out_of_range("EchelonBasis: row index");
        return rows_[i];
    }

    // Remainder of row after elimination against the basis; zero iff row is
    // in the span.
    word reduce(word row) const {
        check_width(row);
        while (row != 0) {
            word low = row & (word(0) - row);
            if ((pivot_mask_ & low) == 0) break;
            row ^= rows_[std::popcount(pivot_mask_ & (low - 1))];
        }
        return row;
    }

    bool contains(word row) const { return reduce(row) == 0; }

    // Grows the span by row if independent; returns true iff the rank grew.
    bool insert(word row) {
        row = reduce(row);
        if (row == 0) return false;
        word low = row & (word(0) - row);
        int pos = std::popcount(pivot_mask_ & (low - 1));
        for (int i = size_; i > pos; --i) rows_[i] = rows_[i - 1];
        rows_[pos] = row;
        pivot_mask_ |= low;
        ++size_;
        return true;
    }

    bool operator==(const EchelonBasis& o) const {
        if (width_ != o.width_ || size_ != o.size_ || pivot_mask_ != o.pivot_mask_) return false;
        for (int i = 0; i < size_; ++i)
            if (rows_[i] != o.rows_[i]) return false;
        return true;
    }

private:
    void check_width(word row) const {
        if (width_ < kMaxCols && (row >> width_) != 0)
            throw std::invalid_argument("EchelonBasis: row has bits beyond the basis width");
    }

    std::array<word, kMaxCols> rows_;
    word pivot_mask_ = 0;
    int size_ = 0;
    int width_;
};

/// Non-mutating insertion: returns the grown basis and whether the rank grew.
/// The argument basis is left untouched.
inline std::pair<EchelonBasis, bool> insert_row(const EchelonBasis& basis, word row) {
    EchelonBasis grown = basis;
    bool grew = grown.insert(row);
    return {std::move(grown), grew};
}

inline int rank(const GF2Matrix& m) {
    EchelonBasis b(m.cols());
    for (int r = 0; r < m.rows(); ++r) b.insert(m.row(r));
    return b.size();
}

// Dimension of the kernel of x -> M x.
inline int nullity(const GF2Matrix& m) { return m.cols() - rank(m); }

inline GF2Matrix transpose(const GF2Matrix& m) {
    if (m.rows() < 1 || m.rows() > kMaxCols)
        throw std::invalid_argument("transpose: need 1..64 rows to form columns");
    GF2Matrix t(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) t.set(c, r, true);
    return t;
}

}
