#include "weylhodge/exactlin/matrix.hpp"

#include "weylhodge/errors.hpp"

#include <algorithm>
#include <map>

namespace weylhodge {

SparseVec::SparseVec(std::size_t dim, std::vector<Entry> entries) : dim_(dim) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& e : entries) {
        if (e.first >= dim_) throw InvalidArgument("sparse vector index out of range");
        if (!entries_.empty() && entries_.back().first == e.first) {
            entries_.back().second += e.second;
            if (entries_.back().second == 0) entries_.pop_back();
        } else if (e.second != 0) {
            entries_.push_back(std::move(e));
        }
    }
}

SparseVec SparseVec::unit(std::size_t dim, std::size_t i) {
    SparseVec v(dim);
    if (i >= dim) throw InvalidArgument("unit vector index out of range");
    v.entries_.emplace_back(i, Rat(1));
    return v;
}

SparseVec SparseVec::from_dense(std::span<const Rat> values) {
    SparseVec v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != 0) v.entries_.emplace_back(i, values[i]);
    return v;
}

Rat SparseVec::at(std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return 0;
}

std::vector<Rat> SparseVec::to_dense() const {
    std::vector<Rat> out(dim_);
    for (const auto& [i, x] : entries_) out[i] = x;
    return out;
}

SparseVec SparseVec::embed(std::span<const std::size_t> positions, std::size_t ambient) const {
    if (positions.size() != dim_) throw InvalidArgument("embedding size mismatch");
    SparseVec out(ambient);
    out.entries_.reserve(entries_.size());
    for (const auto& [i, x] : entries_) {
        if (positions[i] >= ambient) throw InvalidArgument("embedding target out of range");
        out.entries_.emplace_back(positions[i], x);
    }
    return out;
}

SparseVec& SparseVec::operator*=(const Rat& c) {
    if (c == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_) e.second *= c;
    return *this;
}

namespace {

SparseVec combine(const SparseVec& a, const SparseVec& b, int sign) {
    if (a.dim() != b.dim()) throw InvalidArgument("vector dimension mismatch");
    std::vector<SparseVec::Entry> out;
    out.reserve(a.nonzeros() + b.nonzeros());
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
            out.emplace_back(ib->first, sign > 0 ? ib->second : Rat(-ib->second));
            ++ib;
        } else {
            Rat s = sign > 0 ? Rat(ia->second + ib->second) : Rat(ia->second - ib->second);
            if (s != 0) out.emplace_back(ia->first, std::move(s));
            ++ia;
            ++ib;
        }
    }
    return SparseVec(a.dim(), std::move(out));
}

} // namespace

SparseVec operator+(const SparseVec& a, const SparseVec& b) { return combine(a, b, +1); }
SparseVec operator-(const SparseVec& a, const SparseVec& b) { return combine(a, b, -1); }

Rat dot(const SparseVec& a, const SparseVec& b) {
    if (a.dim() != b.dim()) throw InvalidArgument("vector dimension mismatch");
    Rat s = 0;
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() && ib != b.entries().end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            s += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), storage_(Storage::sparse), sparse_(rows, SparseVec(cols)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.sparse_[i] = SparseVec::unit(n, i);
    m.settle();
    return m;
}

RatMatrix RatMatrix::from_rows(std::size_t cols, std::vector<SparseVec> rows) {
    RatMatrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    for (const auto& r : rows)
        if (r.dim() != cols) throw InvalidArgument("row dimension mismatch");
    m.sparse_ = std::move(rows);
    m.settle();
    return m;
}

RatMatrix RatMatrix::from_dense(std::size_t rows, std::size_t cols, std::vector<Rat> values) {
    if (values.size() != rows * cols) throw InvalidArgument("dense matrix size mismatch");
    RatMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.storage_ = Storage::dense;
    m.dense_ = std::move(values);
    m.settle();
    return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows, std::span<const SparseVec> columns) {
    std::vector<std::vector<SparseVec::Entry>> buf(rows);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].dim() != rows) throw InvalidArgument("column dimension mismatch");
        for (const auto& [i, x] : columns[j].entries()) buf[i].emplace_back(j, x);
    }
    std::vector<SparseVec> out;
    out.reserve(rows);
    for (auto& b : buf) out.emplace_back(columns.size(), std::move(b));
    return from_rows(columns.size(), std::move(out));
}

std::size_t RatMatrix::nonzeros() const {
    std::size_t nz = 0;
    if (storage_ == Storage::dense) {
        for (const auto& x : dense_) nz += (x != 0);
    } else {
        for (const auto& r : sparse_) nz += r.nonzeros();
    }
    return nz;
}

void RatMatrix::settle() {
    const std::size_t total = rows_ * cols_;
    const std::size_t nz = nonzeros();
    const bool want_sparse = total == 0 || static_cast<double>(nz) < kSparseFill * static_cast<double>(total);
    *this = with_storage(want_sparse ? Storage::sparse : Storage::dense);
}

Rat RatMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw InvalidArgument("matrix index out of range");
    if (storage_ == Storage::dense) return dense_[i * cols_ + j];
    return sparse_[i].at(j);
}

SparseVec RatMatrix::row(std::size_t i) const {
    if (i >= rows_) throw InvalidArgument("matrix row out of range");
    if (storage_ == Storage::sparse) return sparse_[i];
    return SparseVec::from_dense(std::span<const Rat>(dense_.data() + i * cols_, cols_));
}

std::vector<SparseVec> RatMatrix::row_vectors() const {
    if (storage_ == Storage::sparse) return sparse_;
    std::vector<SparseVec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

RatMatrix RatMatrix::with_storage(Storage s) const {
    RatMatrix m;
    m.rows_ = rows_;
    m.cols_ = cols_;
    m.storage_ = s;
    if (s == storage_) {
        m.dense_ = dense_;
        m.sparse_ = sparse_;
    } else if (s == Storage::sparse) {
        m.sparse_ = row_vectors();
    } else {
        m.dense_.assign(rows_ * cols_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (const auto& [j, x] : sparse_[i].entries()) m.dense_[i * cols_ + j] = x;
    }
    return m;
}

RatMatrix RatMatrix::transpose() const {
    std::vector<std::vector<SparseVec::Entry>> buf(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const SparseVec r = row(i);
        for (const auto& [j, x] : r.entries()) buf[j].emplace_back(i, x);
    }
    std::vector<SparseVec> out;
    out.reserve(cols_);
    for (auto& b : buf) out.emplace_back(rows_, std::move(b));
    return from_rows(rows_, std::move(out));
}

SparseVec RatMatrix::apply(const SparseVec& x) const {
    if (x.dim() != cols_) throw InvalidArgument("matrix-vector dimension mismatch");
    std::vector<SparseVec::Entry> out;
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat s = dot(row(i), x);
        if (s != 0) out.emplace_back(i, std::move(s));
    }
    return SparseVec(rows_, std::move(out));
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
    const auto brows = b.row_vectors();
    std::vector<SparseVec> out;
    out.reserve(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::map<std::size_t, Rat> acc;
        const SparseVec r = a.row(i);
        for (const auto& [k, x] : r.entries())
            for (const auto& [j, y] : brows[k].entries()) acc[j] += x * y;
        std::vector<SparseVec::Entry> entries(acc.begin(), acc.end());
        out.emplace_back(b.cols_, std::move(entries));
    }
    return RatMatrix::from_rows(b.cols_, std::move(out));
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum dimension mismatch");
    std::vector<SparseVec> out;
    out.reserve(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) out.push_back(a.row(i) + b.row(i));
    return RatMatrix::from_rows(a.cols_, std::move(out));
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix difference dimension mismatch");
    std::vector<SparseVec> out;
    out.reserve(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) out.push_back(a.row(i) - b.row(i));
    return RatMatrix::from_rows(a.cols_, std::move(out));
}

RatMatrix operator*(const Rat& c, const RatMatrix& m) {
    auto rows = m.row_vectors();
    for (auto& r : rows) r *= c;
    return RatMatrix::from_rows(m.cols_, std::move(rows));
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.rows_; ++i)
        if (a.row(i) != b.row(i)) return false;
    return true;
}

} // namespace weylhodge
