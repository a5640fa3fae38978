#pragma once

#include "weylhodge/exactlin/rational.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace weylhodge {

/// Coordinate vector with sorted, nonzero entries.
class SparseVec {
public:
    using Entry = std::pair<std::size_t, Rat>;

    SparseVec() = default;
    explicit SparseVec(std::size_t dim) : dim_(dim) {}
    /// Entries may be unsorted and contain duplicates or zeros; they are summed.
    SparseVec(std::size_t dim, std::vector<Entry> entries);

    static SparseVec unit(std::size_t dim, std::size_t i);
    static SparseVec from_dense(std::span<const Rat> values);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t nonzeros() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    Rat at(std::size_t i) const;
    std::vector<Rat> to_dense() const;

    /// Re-embeds a vector living on local coordinates into a larger space,
    /// local index i going to global index positions[i]. positions must be
    /// strictly increasing so the sort order is preserved.
    SparseVec embed(std::span<const std::size_t> positions, std::size_t ambient) const;

    SparseVec& operator*=(const Rat& c);
    friend SparseVec operator+(const SparseVec& a, const SparseVec& b);
    friend SparseVec operator-(const SparseVec& a, const SparseVec& b);
    friend SparseVec operator*(const Rat& c, SparseVec v) { return v *= c; }
    friend bool operator==(const SparseVec&, const SparseVec&) = default;

    /// Sum of a_i * b_i.
    friend Rat dot(const SparseVec& a, const SparseVec& b);

private:
    std::size_t dim_ = 0;
    std::vector<Entry> entries_;
};

enum class Storage { dense, sparse };

/// Exact rational matrix. Storage is picked automatically from the fill ratio
/// (sparse below kSparseFill) unless forced; results never depend on storage.
class RatMatrix {
public:
    static constexpr double kSparseFill = 0.25;

    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(std::size_t cols, std::vector<SparseVec> rows);
    /// Row-major values, rows * cols of them.
    static RatMatrix from_dense(std::size_t rows, std::size_t cols, std::vector<Rat> values);
    /// Matrix whose columns are the given vectors (all of dimension rows).
    static RatMatrix from_columns(std::size_t rows, std::span<const SparseVec> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    Storage storage() const noexcept { return storage_; }
    std::size_t nonzeros() const;

    Rat at(std::size_t i, std::size_t j) const;
    SparseVec row(std::size_t i) const;
    std::vector<SparseVec> row_vectors() const;

    /// Same values, forced into the requested storage.
    RatMatrix with_storage(Storage s) const;

    RatMatrix transpose() const;
    SparseVec apply(const SparseVec& x) const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rat& c, const RatMatrix& m);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

private:
    void settle();  // applies the automatic storage choice

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Storage storage_ = Storage::sparse;
    std::vector<Rat> dense_;         // row-major, used when storage_ == dense
    std::vector<SparseVec> sparse_;  // one per row, used when storage_ == sparse
};

} // namespace weylhodge
