#include "weylhodge/exactlin/subspace.hpp"

#include "weylhodge/errors.hpp"

#include <algorithm>

namespace weylhodge {

SparseVec EchelonBuilder::reduce(const SparseVec& v) const {
    if (v.dim() != ambient_) throw InvalidArgument("vector does not match ambient dimension");
    std::map<std::size_t, Rat> acc;
    for (const auto& [i, x] : v.entries()) acc.emplace(i, x);
    auto it = acc.begin();
    while (it != acc.end()) {
        if (it->second == 0) {
            it = acc.erase(it);
            continue;
        }
        auto p = rows_.find(it->first);
        if (p == rows_.end()) {
            ++it;
            continue;
        }
        // Pivot rows are zero at every other pivot column, so elimination only
        // touches columns to the right of the current one.
        const Rat c = it->second;
        const auto& entries = p->second.entries();
        for (auto e = entries.begin() + 1; e != entries.end(); ++e) acc[e->first] -= c * e->second;
        it = acc.erase(it);
    }
    std::vector<SparseVec::Entry> out;
    out.reserve(acc.size());
    for (auto& [i, x] : acc)
        if (x != 0) out.emplace_back(i, std::move(x));
    return SparseVec(ambient_, std::move(out));
}

bool EchelonBuilder::add(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.is_zero()) return false;
    const std::size_t pivot = r.entries().front().first;
    r *= Rat(1 / r.entries().front().second);
    for (auto& [col, row] : rows_) {
        if (col > pivot) break;
        const Rat c = row.at(pivot);
        if (c != 0) row = row - c * r;
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

std::vector<SparseVec> EchelonBuilder::rows() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (const auto& [col, row] : rows_) out.push_back(row);
    return out;
}

// ---------------------------------------------------------------------------

SubspaceBasis SubspaceBasis::span(std::size_t ambient, std::span<const SparseVec> vectors) {
    EchelonBuilder b(ambient);
    for (const auto& v : vectors) b.add(v);
    SubspaceBasis s(ambient);
    s.vectors_ = b.rows();
    return s;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient) {
    SubspaceBasis s(ambient);
    s.vectors_.reserve(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.vectors_.push_back(SparseVec::unit(ambient, i));
    return s;
}

std::vector<std::size_t> SubspaceBasis::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(vectors_.size());
    for (const auto& v : vectors_) out.push_back(v.entries().front().first);
    return out;
}

bool SubspaceBasis::contains(const SparseVec& v) const {
    if (v.dim() != ambient_) throw InvalidArgument("vector does not match ambient dimension");
    // Reduce against the stored echelon rows directly.
    std::map<std::size_t, Rat> acc;
    for (const auto& [i, x] : v.entries()) acc.emplace(i, x);
    for (const auto& row : vectors_) {
        const std::size_t p = row.entries().front().first;
        auto it = acc.find(p);
        if (it == acc.end() || it->second == 0) continue;
        const Rat c = it->second;
        for (const auto& [j, x] : row.entries()) acc[j] -= c * x;
    }
    return std::all_of(acc.begin(), acc.end(), [](const auto& e) { return e.second == 0; });
}

// ---------------------------------------------------------------------------

namespace {

std::vector<SparseVec> rref_dense(const RatMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Rat> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m.at(i, j);

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
        const Rat inv = 1 / a[r * cols + c];
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i * cols + c] == 0) continue;
            const Rat f = a[i * cols + c];
            for (std::size_t j = c; j < cols; ++j) a[i * cols + j] -= f * a[r * cols + j];
        }
        ++r;
    }
    std::vector<SparseVec> out;
    out.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
        out.push_back(SparseVec::from_dense(std::span<const Rat>(a.data() + i * cols, cols)));
    return out;
}

std::vector<SparseVec> rref_sparse(const RatMatrix& m) {
    EchelonBuilder b(m.cols());
    for (const auto& r : m.row_vectors()) b.add(r);
    return b.rows();
}

} // namespace

std::vector<SparseVec> rref(const RatMatrix& m) {
    return m.storage() == Storage::dense ? rref_dense(m) : rref_sparse(m);
}

std::size_t rank(const RatMatrix& m) { return rref(m).size(); }

SubspaceBasis row_space(const RatMatrix& m) {
    auto rows = rref(m);
    return SubspaceBasis::span(m.cols(), rows);
}

SubspaceBasis kernel_basis(const RatMatrix& m) {
    const auto rows = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (const auto& r : rows) is_pivot[r.entries().front().first] = true;

    // One kernel vector per free column f: x_f = 1, x_pivot(r) = -r[f].
    std::vector<std::vector<SparseVec::Entry>> buf(n);
    for (std::size_t f = 0; f < n; ++f)
        if (!is_pivot[f]) buf[f].emplace_back(f, Rat(1));
    for (const auto& r : rows) {
        const std::size_t p = r.entries().front().first;
        for (auto e = r.entries().begin() + 1; e != r.entries().end(); ++e)
            buf[e->first].emplace_back(p, Rat(-e->second));
    }
    std::vector<SparseVec> basis;
    for (std::size_t f = 0; f < n; ++f)
        if (!is_pivot[f]) basis.emplace_back(n, std::move(buf[f]));
    return SubspaceBasis::span(n, basis);
}

SubspaceBasis image_basis(const RatMatrix& m) { return row_space(m.transpose()); }

SubspaceBasis annihilator(const SubspaceBasis& a) {
    return kernel_basis(RatMatrix::from_rows(a.ambient_dim(), a.vectors()));
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw InvalidArgument("intersect: ambient dimension mismatch");
    if (a.is_zero() || b.is_zero()) return SubspaceBasis(a.ambient_dim());
    if (a.dim() == a.ambient_dim()) return b;
    if (b.dim() == b.ambient_dim()) return a;
    // a ∩ b = (a^⊥ + b^⊥)^⊥
    auto rows = annihilator(a).vectors();
    const SubspaceBasis b_perp = annihilator(b);
    const auto& bp = b_perp.vectors();
    rows.insert(rows.end(), bp.begin(), bp.end());
    return kernel_basis(RatMatrix::from_rows(a.ambient_dim(), std::move(rows)));
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw InvalidArgument("subspace_sum: ambient dimension mismatch");
    EchelonBuilder builder(a.ambient_dim());
    for (const auto& v : a.vectors()) builder.add(v);
    for (const auto& v : b.vectors()) builder.add(v);
    auto rows = builder.rows();
    return SubspaceBasis::span(a.ambient_dim(), rows);
}

bool is_idempotent(const RatMatrix& m) {
    if (!m.is_square()) throw InvalidArgument("is_idempotent: matrix is not square");
    return m * m == m;
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw InvalidArgument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    // Row-reduce [m | I]; the right half of the result is the inverse.
    std::vector<SparseVec> aug;
    aug.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<SparseVec::Entry> e;
        const SparseVec r = m.row(i);
        for (const auto& [j, x] : r.entries()) e.emplace_back(j, x);
        e.emplace_back(n + i, Rat(1));
        aug.emplace_back(2 * n, std::move(e));
    }
    const auto red = rref(RatMatrix::from_rows(2 * n, std::move(aug)));
    if (red.size() != n || red.back().entries().front().first >= n)
        throw InvalidArgument("inverse: matrix is singular");
    std::vector<SparseVec> out;
    out.reserve(n);
    for (const auto& r : red) {
        std::vector<SparseVec::Entry> e;
        for (const auto& [j, x] : r.entries())
            if (j >= n) e.emplace_back(j - n, x);
        out.emplace_back(n, std::move(e));
    }
    return RatMatrix::from_rows(n, std::move(out));
}

} // namespace weylhodge
