#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "concept_homology/errors.hpp"

namespace concept_homology {

/// A column over GF(2) stored as a strictly increasing list of row indices.
class SparseColumn {
public:
    SparseColumn() = default;
    explicit SparseColumn(std::vector<std::uint32_t> sorted_rows) : rows_(std::move(sorted_rows)) {}

    [[nodiscard]] bool empty() const { return rows_.empty(); }
    [[nodiscard]] std::optional<std::size_t> lowest() const
    {
        if (rows_.empty()) return std::nullopt;
        return rows_.back();
    }
    [[nodiscard]] const std::vector<std::uint32_t>& rows() const { return rows_; }

    /// this += other over GF(2).
    void add(const SparseColumn& other)
    {
        scratch_.clear();
        std::set_symmetric_difference(rows_.begin(), rows_.end(), other.rows_.begin(), other.rows_.end(),
                                      std::back_inserter(scratch_));
        rows_.swap(scratch_);
    }

    friend bool operator==(const SparseColumn& a, const SparseColumn& b) { return a.rows_ == b.rows_; }

private:
    std::vector<std::uint32_t> rows_;
    std::vector<std::uint32_t> scratch_;
};

/// A column over GF(2) stored as a packed bitset of fixed height.
class DenseColumn {
public:
    DenseColumn() = default;
    DenseColumn(std::size_t height, const std::vector<std::uint32_t>& rows) : words_((height + 63) / 64, 0)
    {
        for (auto r : rows) words_[r / 64] ^= std::uint64_t{1} << (r % 64);
    }

    [[nodiscard]] bool empty() const
    {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    [[nodiscard]] std::optional<std::size_t> lowest() const
    {
        for (std::size_t w = words_.size(); w-- > 0;)
            if (words_[w] != 0) return w * 64 + (63 - static_cast<std::size_t>(std::countl_zero(words_[w])));
        return std::nullopt;
    }
    [[nodiscard]] std::vector<std::uint32_t> rows() const
    {
        std::vector<std::uint32_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits != 0) {
                out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }
    void add(const DenseColumn& other)
    {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }

private:
    std::vector<std::uint64_t> words_;
};

/**
 * Left-to-right column elimination with lowest-one pivoting.
 *
 * Columns are pushed in order; each is reduced against the columns already
 * stored until its lowest one is unclaimed or it vanishes. The same kernel
 * backs matrix rank, cycle bases and the persistence reduction. The
 * callback receives the index of every stored column added to the
 * incoming one, which lets callers track the change-of-basis matrix.
 */
template <class Column>
class ColumnReducer {
public:
    explicit ColumnReducer(std::size_t rows) : pivot_of_row_(rows, kNone) {}

    template <class OnAdd>
    std::optional<std::size_t> push(Column column, OnAdd&& on_add)
    {
        const std::size_t j = reduced_.size();
        while (auto low = column.lowest()) {
            const std::size_t owner = pivot_of_row_[*low];
            if (owner == kNone) {
                pivot_of_row_[*low] = j;
                reduced_.push_back(std::move(column));
                ++rank_;
                return low;
            }
            column.add(reduced_[owner]);
            on_add(owner);
        }
        reduced_.push_back(std::move(column));
        return std::nullopt;
    }

    std::optional<std::size_t> push(Column column)
    {
        return push(std::move(column), [](std::size_t) {});
    }

    [[nodiscard]] const Column& reduced(std::size_t j) const { return reduced_[j]; }
    [[nodiscard]] std::size_t size() const { return reduced_.size(); }
    [[nodiscard]] std::size_t rank() const { return rank_; }

    /// Column whose reduced lowest one sits in this row, if any.
    [[nodiscard]] std::optional<std::size_t> pivot_column(std::size_t row) const
    {
        if (pivot_of_row_[row] == kNone) return std::nullopt;
        return pivot_of_row_[row];
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::vector<std::size_t> pivot_of_row_;
    std::vector<Column> reduced_;
    std::size_t rank_ = 0;
};

/// Sparse matrix over the two-element field, one sorted row-index list per column.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    /// Throws ArgumentError on an out-of-range or repeated row index.
    GF2Matrix(std::size_t rows, std::vector<std::vector<std::uint32_t>> columns) : rows_(rows)
    {
        columns_.reserve(columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            auto& col = columns[c];
            std::sort(col.begin(), col.end());
            if (std::adjacent_find(col.begin(), col.end()) != col.end())
                throw ArgumentError("duplicate row entry in column " + std::to_string(c));
            if (!col.empty() && col.back() >= rows)
                throw ArgumentError("row index " + std::to_string(col.back()) + " out of range in column " +
                                    std::to_string(c));
            columns_.emplace_back(std::move(col));
        }
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return columns_.size(); }
    [[nodiscard]] const SparseColumn& column(std::size_t c) const { return columns_[c]; }
    [[nodiscard]] const std::vector<SparseColumn>& columns() const { return columns_; }

    [[nodiscard]] bool at(std::size_t r, std::size_t c) const
    {
        const auto& rs = columns_[c].rows();
        return std::binary_search(rs.begin(), rs.end(), static_cast<std::uint32_t>(r));
    }

    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(columns_.begin(), columns_.end(), [](const SparseColumn& c) { return c.empty(); });
    }

    [[nodiscard]] std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.rows().size();
        return n;
    }

    friend bool operator==(const GF2Matrix& a, const GF2Matrix& b)
    {
        return a.rows_ == b.rows_ && a.columns_ == b.columns_;
    }

private:
    std::size_t rows_ = 0;
    std::vector<SparseColumn> columns_;
};

/// Product a * b over GF(2).
inline GF2Matrix multiply(const GF2Matrix& a, const GF2Matrix& b)
{
    if (a.cols() != b.rows())
        throw ArgumentError("dimension mismatch: " + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
    std::vector<std::vector<std::uint32_t>> out(b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        SparseColumn acc;
        for (auto k : b.column(c).rows()) acc.add(a.column(k));
        out[c] = acc.rows();
    }
    return GF2Matrix(a.rows(), std::move(out));
}

enum class ColumnLayout { automatic, sparse, dense };

/// Matrices with at most this many rows use bitset columns under ColumnLayout::automatic.
inline constexpr std::size_t kDenseRowLimit = 64 * 64;

/// Rank over GF(2) by column elimination.
inline std::size_t rank_gf2(const GF2Matrix& m, ColumnLayout layout = ColumnLayout::automatic)
{
    if (layout == ColumnLayout::automatic)
        layout = m.rows() <= kDenseRowLimit ? ColumnLayout::dense : ColumnLayout::sparse;
    if (layout == ColumnLayout::dense) {
        ColumnReducer<DenseColumn> reducer(m.rows());
        for (const auto& c : m.columns()) reducer.push(DenseColumn(m.rows(), c.rows()));
        return reducer.rank();
    }
    ColumnReducer<SparseColumn> reducer(m.rows());
    for (const auto& c : m.columns()) reducer.push(c);
    return reducer.rank();
}

} // namespace concept_homology
