#pragma once

#include "weylhodge/exactlin/matrix.hpp"

#include <map>
#include <span>
#include <vector>

namespace weylhodge {

/// Incremental reduced-row-echelon form over Q. Rows are kept fully reduced
/// with unit pivots, so the row set only depends on the span.
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient) {}

    /// Adds v to the span; returns false when v was already in it.
    bool add(const SparseVec& v);
    /// Remainder of v after elimination against the current pivots.
    SparseVec reduce(const SparseVec& v) const;

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    /// Rows sorted by pivot column.
    std::vector<SparseVec> rows() const;

private:
    std::size_t ambient_;
    std::map<std::size_t, SparseVec> rows_;  // pivot column -> row
};

/// Subspace of Q^ambient held as its reduced row echelon basis, so two bases
/// spanning the same subspace compare equal.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(std::size_t ambient) : ambient_(ambient) {}

    static SubspaceBasis span(std::size_t ambient, std::span<const SparseVec> vectors);
    static SubspaceBasis full(std::size_t ambient);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return vectors_.size(); }
    bool is_zero() const noexcept { return vectors_.empty(); }
    const std::vector<SparseVec>& vectors() const noexcept { return vectors_; }
    std::vector<std::size_t> pivots() const;

    bool contains(const SparseVec& v) const;

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<SparseVec> vectors_;
};

/// Reduced row echelon rows of m (nonzero rows only). Dense and sparse
/// storage take separate elimination paths with identical results.
std::vector<SparseVec> rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
SubspaceBasis row_space(const RatMatrix& m);
SubspaceBasis kernel_basis(const RatMatrix& m);
/// Column space, as a subspace of Q^rows.
SubspaceBasis image_basis(const RatMatrix& m);

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
/// Orthogonal complement for the standard dot product.
SubspaceBasis annihilator(const SubspaceBasis& a);

bool is_idempotent(const RatMatrix& m);
/// Exact inverse; throws InvalidArgument for singular or non-square input.
RatMatrix inverse(const RatMatrix& m);

} // namespace weylhodge
