#include "weylhodge/hodgemotive/bigraded.hpp"

#include "weylhodge/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace weylhodge {

BigradedDims BigradedDims::point() {
    BigradedDims out;
    out.add(0, 0, 1);
    return out;
}

BigInt BigradedDims::at(int p, int q) const {
    auto it = table_.find({p, q});
    return it == table_.end() ? BigInt(0) : it->second;
}

void BigradedDims::add(int p, int q, const BigInt& dim) {
    if (dim == 0) return;
    BigInt& slot = table_[{p, q}];
    slot += dim;
    if (slot == 0) table_.erase({p, q});
}

BigInt BigradedDims::total() const {
    BigInt s = 0;
    for (const auto& [key, dim] : table_) s += dim;
    return s;
}

BigradedDims BigradedDims::degree_piece(int k) const {
    BigradedDims out;
    for (const auto& [key, dim] : table_)
        if (key.first + key.second == k) out.add(key.first, key.second, dim);
    return out;
}

std::optional<int> BigradedDims::single_degree() const {
    std::optional<int> k;
    for (const auto& [key, dim] : table_) {
        const int d = key.first + key.second;
        if (k && *k != d) return std::nullopt;
        k = d;
    }
    return k;
}

bool BigradedDims::is_hodge_symmetric() const {
    return std::all_of(table_.begin(), table_.end(),
                       [&](const auto& e) { return at(e.first.second, e.first.first) == e.second; });
}

BigInt BigradedDims::holomorphic_row() const {
    BigInt s = 0;
    for (const auto& [key, dim] : table_)
        if (key.second == 0) s += dim;
    return s;
}

BigradedDims abelian_hodge(int g) {
    if (g < 0) throw InvalidArgument("abelian variety dimension must be nonnegative");
    BigradedDims out;
    for (int p = 0; p <= g; ++p)
        for (int q = 0; q <= g; ++q) out.add(p, q, binomial(g, p) * binomial(g, q));
    return out;
}

BigradedDims kunneth(const BigradedDims& a, const BigradedDims& b) {
    BigradedDims out;
    for (const auto& [ka, da] : a.table())
        for (const auto& [kb, db] : b.table()) out.add(ka.first + kb.first, ka.second + kb.second, da * db);
    return out;
}

namespace {

// Coefficient of z^N in Π_{(p,q)} (1 ± x^p y^q z)^{∓h}, expanded one basis
// type at a time with truncation at z^N.
BigradedDims power(const BigradedDims& a, int N, bool exterior) {
    if (N < 0) throw InvalidArgument("negative power");
    std::vector<BigradedDims> layers(N + 1);
    layers[0] = BigradedDims::point();
    for (const auto& [key, h] : a.table()) {
        if (!h.fits_slong_p()) throw ResourceLimit("Hodge number too large for plethysm");
        const long hl = h.get_si();
        std::vector<BigradedDims> next(N + 1);
        for (int j = 0; j <= N; ++j)
            for (int t = 0; t <= j; ++t) {
                const BigInt c = exterior ? binomial(hl, t) : binomial(hl + t - 1, t);
                if (c == 0) continue;
                for (const auto& [u, x] : layers[j - t].table())
                    next[j].add(u.first + t * key.first, u.second + t * key.second, c * x);
            }
        layers = std::move(next);
    }
    return layers[N];
}

int require_single_degree(const BigradedDims& a) {
    if (a.empty()) return 0;
    const auto k = a.single_degree();
    if (!k) throw InvalidArgument("input table is not concentrated in a single total degree");
    return *k;
}

} // namespace

BigradedDims plain_sym(const BigradedDims& a, int N) { return power(a, N, false); }
BigradedDims plain_ext(const BigradedDims& a, int N) { return power(a, N, true); }

BigradedDims super_sym(const BigradedDims& a, int N) {
    const int k = require_single_degree(a);
    return power(a, N, k % 2 != 0);
}

BigradedDims super_ext(const BigradedDims& a, int N) {
    const int k = require_single_degree(a);
    return power(a, N, k % 2 == 0);
}

std::optional<int> level(const BigradedDims& a) {
    std::optional<int> best;
    for (const auto& [key, dim] : a.table()) {
        const int l = std::abs(key.first - key.second);
        if (!best || l > *best) best = l;
    }
    return best;
}

int coniveau_in_degree(const BigradedDims& a, int k) {
    if (a.empty()) return k;
    const auto d = a.single_degree();
    if (!d || *d != k) throw InvalidArgument("table is not concentrated in the requested degree");
    return (k - *level(a)) / 2;
}

bool sym_vanishing_check(int g, int i, int N) {
    if (g < 0 || i < 0 || i > g) throw InvalidArgument("sym_vanishing_check needs 0 <= i <= g");
    if (N < 1) throw InvalidArgument("sym_vanishing_check needs N >= 1");
    const BigradedDims h = abelian_hodge(g).degree_piece(2 * g - i);
    const BigradedDims powered = i % 2 != 0 ? super_sym(h, N) : super_ext(h, N);
    return powered.holomorphic_row() == 0;
}

std::optional<int> first_vanishing_power(int g, int i, int limit) {
    for (int N = 1; N <= limit; ++N)
        if (sym_vanishing_check(g, i, N)) return N;
    return std::nullopt;
}

BigInt primitive_filtration_dims(int g, int k, int n) {
    if (g < 0 || k < 0 || k > 2 * g) throw InvalidArgument("primitive filtration needs 0 <= k <= 2g");
    BigInt s = 0;
    for (int r = std::max(n, 0); 2 * r <= k; ++r) {
        const int j = k - 2 * r;
        if (j > g || j + r > g) continue;
        s += binomial(2 * g, j) - binomial(2 * g, j - 2);
    }
    return s;
}

bool skew_vanishing(const BigradedDims& a, int N) {
    const int k = require_single_degree(a);
    if (k % 2 != 0) throw InvalidArgument("skew_vanishing needs a table in a single even degree");
    return super_ext(a, N).holomorphic_row() == 0;
}

} // namespace weylhodge
