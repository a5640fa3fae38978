#include "weylhodge/hodgemotive/kleiman.hpp"

#include "weylhodge/errors.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace weylhodge {

ExteriorModel::ExteriorModel(int g) : g_(g) {
    if (g < 0) throw InvalidArgument("abelian variety dimension must be nonnegative");
    if (g > kMaxGenus) throw ResourceLimit("exterior-algebra model is limited to g <= 4");
    by_degree_.resize(2 * g + 1);
    for (std::uint32_t m = 0; m < dim(); ++m) by_degree_[std::popcount(m)].push_back(m);
}

std::pair<int, std::uint32_t> ExteriorModel::wedge(std::uint32_t a, std::uint32_t b) {
    if (a & b) return {0, 0};
    int inversions = 0;
    for (std::uint32_t rest = b; rest; rest &= rest - 1) {
        const std::uint32_t low = rest & (~rest + 1);
        inversions += std::popcount(a & ~(low | (low - 1)));
    }
    return {inversions % 2 ? -1 : 1, a | b};
}

SparseVec ExteriorModel::multiply(const SparseVec& a, const SparseVec& b) const {
    std::vector<SparseVec::Entry> out;
    for (const auto& [i, x] : a.entries())
        for (const auto& [j, y] : b.entries()) {
            const auto [sign, mask] = wedge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            if (sign != 0) out.emplace_back(mask, sign * x * y);
        }
    return SparseVec(dim(), std::move(out));
}

SparseVec ExteriorModel::polarization() const {
    std::vector<SparseVec::Entry> out;
    for (int i = 0; i < g_; ++i) out.emplace_back((std::size_t{1} << i) | (std::size_t{1} << (g_ + i)), Rat(1));
    return SparseVec(dim(), std::move(out));
}

RatMatrix ExteriorModel::lefschetz_operator() const {
    const SparseVec l = polarization();
    std::vector<SparseVec> cols;
    cols.reserve(dim());
    for (std::size_t m = 0; m < dim(); ++m) cols.push_back(multiply(l, SparseVec::unit(dim(), m)));
    return RatMatrix::from_columns(dim(), cols);
}

RatMatrix ExteriorModel::degree_projector(int k) const {
    std::vector<SparseVec> rows(dim(), SparseVec(dim()));
    if (k >= 0 && k <= 2 * g_)
        for (auto m : degree_basis(k)) rows[m] = SparseVec::unit(dim(), m);
    return RatMatrix::from_rows(dim(), std::move(rows));
}

RatMatrix ExteriorModel::cup_pairing() const {
    const std::uint32_t top = static_cast<std::uint32_t>(dim() - 1);
    std::vector<SparseVec> rows;
    rows.reserve(dim());
    for (std::uint32_t a = 0; a < dim(); ++a) {
        const std::uint32_t b = top & ~a;
        rows.push_back(Rat(wedge(a, b).first) * SparseVec::unit(dim(), b));
    }
    return RatMatrix::from_rows(dim(), std::move(rows));
}

namespace {

SparseVec lefschetz_power(const ExteriorModel& model, SparseVec v, int r) {
    const SparseVec l = model.polarization();
    for (int i = 0; i < r; ++i) v = model.multiply(l, v);
    return v;
}

std::vector<std::size_t> positions(const std::vector<std::uint32_t>& masks) {
    return {masks.begin(), masks.end()};
}

// Coordinates of v in the degree-k monomial basis.
SparseVec restrict_to_degree(const ExteriorModel& model, const SparseVec& v, int k) {
    const auto& masks = model.degree_basis(k);
    std::unordered_map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < masks.size(); ++i) local.emplace(masks[i], i);
    std::vector<SparseVec::Entry> out;
    for (const auto& [i, x] : v.entries()) {
        auto it = local.find(i);
        if (it == local.end()) throw std::logic_error("vector leaves the expected degree");
        out.emplace_back(it->second, x);
    }
    return SparseVec(masks.size(), std::move(out));
}

} // namespace

SubspaceBasis ExteriorModel::primitive_subspace(int k) const {
    if (k < 0 || k > g_) throw InvalidArgument("primitive cohomology lives in degrees 0..g");
    const auto& masks = degree_basis(k);
    const auto pos = positions(masks);
    std::vector<SparseVec> cols;
    for (auto m : masks) cols.push_back(lefschetz_power(*this, SparseVec::unit(dim(), m), g_ - k + 1));
    const SubspaceBasis local = kernel_basis(RatMatrix::from_columns(dim(), cols));
    std::vector<SparseVec> embedded;
    for (const auto& v : local.vectors()) embedded.push_back(v.embed(pos, dim()));
    return SubspaceBasis::span(dim(), embedded);
}

RatMatrix ExteriorModel::lefschetz_power_between(int i) const {
    if (i < 0 || i > g_) throw InvalidArgument("hard Lefschetz degree must lie in 0..g");
    std::vector<SparseVec> cols;
    for (auto m : degree_basis(i))
        cols.push_back(restrict_to_degree(*this, lefschetz_power(*this, SparseVec::unit(dim(), m), g_ - i), 2 * g_ - i));
    return RatMatrix::from_columns(degree_basis(2 * g_ - i).size(), cols);
}

bool hard_lefschetz_holds(int g) {
    const ExteriorModel model(g);
    for (int i = 0; i <= g; ++i) {
        const RatMatrix m = model.lefschetz_power_between(i);
        if (!m.is_square() || rank(m) != m.rows()) return false;
    }
    return true;
}

ProjectorFamily kleiman_projectors(int g) {
    const ExteriorModel model(g);
    if (!hard_lefschetz_holds(g)) throw std::logic_error("hard Lefschetz fails in the exterior-algebra model");

    std::vector<SubspaceBasis> primitive;
    for (int j = 0; j <= g; ++j) primitive.push_back(model.primitive_subspace(j));

    ProjectorFamily family;
    family.g = g;
    for (int k = 0; k <= 2 * g; ++k) {
        // Columns of B: L^r applied to primitive bases, grouped by r.
        std::vector<SparseVec> cols;
        std::vector<std::pair<int, std::size_t>> blocks;  // (r, column count)
        for (int r = 0; 2 * r <= k; ++r) {
            const int j = k - 2 * r;
            if (j > g || j + r > g) continue;
            const auto& basis = primitive[j].vectors();
            for (const auto& v : basis) cols.push_back(restrict_to_degree(model, lefschetz_power(model, v, r), k));
            blocks.emplace_back(r, basis.size());
        }
        const auto& masks = model.degree_basis(k);
        const RatMatrix b = RatMatrix::from_columns(masks.size(), cols);
        const RatMatrix b_inv = inverse(b);
        const auto pos = positions(masks);

        std::size_t offset = 0;
        for (const auto& [r, count] : blocks) {
            std::vector<SparseVec> selector(masks.size(), SparseVec(masks.size()));
            for (std::size_t c = offset; c < offset + count; ++c) selector[c] = SparseVec::unit(masks.size(), c);
            offset += count;
            const RatMatrix local = b * RatMatrix::from_rows(masks.size(), std::move(selector)) * b_inv;

            std::vector<SparseVec> rows(model.dim(), SparseVec(model.dim()));
            for (std::size_t a = 0; a < masks.size(); ++a) rows[masks[a]] = local.row(a).embed(pos, model.dim());
            family.matrices.emplace(std::pair{k, r}, RatMatrix::from_rows(model.dim(), std::move(rows)));
        }
    }
    return family;
}

RatMatrix orthogonal_projector(const SubspaceBasis& s, const RatMatrix& pairing) {
    const std::size_t n = s.ambient_dim();
    if (!pairing.is_square() || pairing.rows() != n) throw InvalidArgument("pairing does not match the ambient space");
    if (s.is_zero()) return RatMatrix(n, n);
    const RatMatrix basis = RatMatrix::from_columns(n, s.vectors());
    const RatMatrix basis_t = basis.transpose();
    const RatMatrix gram = basis_t * pairing * basis;
    if (rank(gram) != gram.rows()) throw InvalidArgument("pairing is degenerate on the subspace");
    return basis * inverse(gram) * basis_t * pairing;
}

BeauvilleWeight beauville_weight(int i, int j, int g) {
    if (g < 0) throw InvalidArgument("abelian variety dimension must be nonnegative");
    const int k = i - 2 * j;
    if (k < 0 || k > 2 * g) throw InvalidArgument("Beauville piece h^{i-2j} must satisfy 0 <= i - 2j <= 2g");
    return {k, k, 2 * g - k};
}

} // namespace weylhodge
