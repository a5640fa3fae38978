#include "weylhodge/errors.hpp"
#include "weylhodge/hodgemotive/bigraded.hpp"
#include "weylhodge/hodgemotive/kleiman.hpp"
#include "weylhodge/hodgemotive/molien.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

using namespace weylhodge;

namespace {

BigradedDims table(std::initializer_list<std::tuple<int, int, long>> entries) {
    BigradedDims out;
    for (auto [p, q, d] : entries) out.add(p, q, d);
    return out;
}

Rat determinant(std::vector<std::vector<Rat>> a) {
    const std::size_t n = a.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rat f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

// (1/(n+1)!) Σ_σ det(1 + tσ)^g on the sum-zero hyperplane, basis e_i - e_{n+1},
// summed permutation by permutation.
Rat molien_by_brute_force(int g, int n, long t) {
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 0);
    Rat total = 0;
    long count = 0;
    do {
        // σ(e_j - e_n) = e_σ(j) - e_σ(n), re-expressed in the basis.
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
        for (int j = 0; j < n; ++j) {
            if (perm[j] < n) m[perm[j]][j] += 1;
            if (perm[n] < n) m[perm[n]][j] -= 1;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = (i == j ? Rat(1) : Rat(0)) + Rat(t) * m[i][j];
        Rat d = determinant(m), p = 1;
        for (int i = 0; i < g; ++i) p *= d;
        total += p;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / count;
}

Rat evaluate(const Polynomial& p, long t) {
    Rat s = 0, power = 1;
    for (const auto& c : p) {
        s += Rat(c) * power;
        power *= t;
    }
    return s;
}

} // namespace

TEST_CASE("abelian Hodge numbers") {
    CHECK(abelian_hodge(0) == BigradedDims::point());
    CHECK(abelian_hodge(1) == table({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    const auto h = abelian_hodge(2);
    CHECK(h.at(2, 0) == 1);
    CHECK(h.at(1, 1) == 4);
    CHECK(h.at(2, 1) == 2);
    CHECK(h.at(2, 2) == 1);
    CHECK(h.total() == 16);
    CHECK(h.is_hodge_symmetric());
    CHECK_THROWS_AS(abelian_hodge(-1), InvalidArgument);
}

TEST_CASE("Kunneth") {
    CHECK(kunneth(abelian_hodge(1), abelian_hodge(1)) == abelian_hodge(2));
    CHECK(kunneth(abelian_hodge(2), abelian_hodge(1)) == kunneth(abelian_hodge(1), abelian_hodge(2)));
    CHECK(kunneth(BigradedDims::point(), abelian_hodge(3)) == abelian_hodge(3));
}

TEST_CASE("super powers") {
    const auto h2 = abelian_hodge(2).degree_piece(2);
    const auto ext2 = super_ext(h2, 2);
    CHECK(ext2.holomorphic_row() == 0);
    CHECK(ext2.total() == 15);

    const auto h3 = abelian_hodge(2).degree_piece(3);
    CHECK(super_sym(h3, 2) == plain_ext(h3, 2));
    CHECK(super_sym(h3, 2).holomorphic_row() == 0);
    CHECK(super_ext(h3, 2) == plain_sym(h3, 2));
    CHECK(super_sym(h2, 1) == h2);
    CHECK(super_ext(h3, 1) == h3);
    CHECK(super_sym(h2, 0) == BigradedDims::point());
    CHECK_THROWS_AS(super_sym(abelian_hodge(1), 2), InvalidArgument);
}

TEST_CASE("super power masses follow the parity rule") {
    for (int g = 1; g <= 3; ++g)
        for (int k = 0; k <= 2 * g; ++k) {
            const auto piece = abelian_hodge(g).degree_piece(k);
            const long dim = piece.total().get_si();
            for (int N = 0; N <= 4; ++N) {
                const bool odd = k % 2 != 0;
                REQUIRE(super_sym(piece, N).total() == (odd ? binomial(dim, N) : binomial(dim + N - 1, N)));
                REQUIRE(super_ext(piece, N).total() == (odd ? binomial(dim + N - 1, N) : binomial(dim, N)));
                const auto powered = super_sym(piece, N);
                for (const auto& [key, d] : powered.table()) REQUIRE(key.first + key.second == N * k);
            }
        }
}

TEST_CASE("level and coniveau") {
    const auto h2 = abelian_hodge(2).degree_piece(2);
    CHECK(level(h2) == 2);
    CHECK(coniveau_in_degree(h2, 2) == 0);
    const auto middle = table({{1, 1, 4}});
    CHECK(level(middle) == 0);
    CHECK(coniveau_in_degree(middle, 2) == 1);
    CHECK_FALSE(level(BigradedDims{}).has_value());
    CHECK(coniveau_in_degree(BigradedDims{}, 5) == 5);
    CHECK_THROWS_AS(coniveau_in_degree(h2, 3), InvalidArgument);
}

TEST_CASE("symmetric-power vanishing") {
    CHECK(sym_vanishing_check(2, 2, 2));
    CHECK_FALSE(sym_vanishing_check(2, 2, 1));
    CHECK(sym_vanishing_check(3, 1, 4));
    CHECK(first_vanishing_power(3, 3, 5) == 2);
    CHECK(first_vanishing_power(3, 1, 5) == 1);
    CHECK_THROWS_AS(sym_vanishing_check(2, 3, 1), InvalidArgument);
    CHECK_THROWS_AS(sym_vanishing_check(2, 1, 0), InvalidArgument);
}

TEST_CASE("primitive filtration") {
    CHECK(primitive_filtration_dims(2, 2, 1) == 1);
    CHECK(primitive_filtration_dims(2, 3, 1) == 4);
    CHECK(primitive_filtration_dims(2, 2, 0) == 6);
    CHECK(primitive_filtration_dims(2, 4, 0) == 1);
    CHECK(primitive_filtration_dims(2, 4, 2) == 1);
    CHECK(primitive_filtration_dims(2, 4, 1) == 1);
    for (int g = 0; g <= 4; ++g)
        for (int k = 0; k <= 2 * g; ++k) {
            REQUIRE(primitive_filtration_dims(g, k, 0) == binomial(2 * g, k));
            for (int n = 0; 2 * n <= k; ++n) REQUIRE(primitive_filtration_dims(g, k, n) >= primitive_filtration_dims(g, k, n + 1));
        }
}

TEST_CASE("skew vanishing") {
    CHECK(skew_vanishing(table({{2, 0, 1}, {1, 1, 7}, {0, 2, 1}}), 2));
    CHECK_FALSE(skew_vanishing(table({{2, 0, 2}, {1, 1, 7}, {0, 2, 2}}), 2));
    CHECK_FALSE(skew_vanishing(table({{2, 0, 1}, {0, 2, 1}}), 1));
    CHECK(skew_vanishing(table({{1, 1, 3}}), 1));
    CHECK_THROWS_AS(skew_vanishing(abelian_hodge(2).degree_piece(3), 2), InvalidArgument);
}

TEST_CASE("exterior model") {
    CHECK(ExteriorModel::wedge(0b01, 0b10) == std::pair<int, std::uint32_t>{1, 0b11});
    CHECK(ExteriorModel::wedge(0b10, 0b01) == std::pair<int, std::uint32_t>{-1, 0b11});
    CHECK(ExteriorModel::wedge(0b11, 0b01).first == 0);
    CHECK(ExteriorModel::wedge(0b0101, 0b1010).first == -1);
    const ExteriorModel model(2);
    CHECK(model.dim() == 16);
    CHECK(model.degree_basis(2).size() == 6);
    const auto l = model.polarization();
    CHECK(model.multiply(l, model.multiply(l, l)).is_zero());
    CHECK(model.multiply(l, l).nonzeros() == 1);
    CHECK(model.primitive_subspace(1).dim() == 4);
    CHECK(model.primitive_subspace(2).dim() == 5);
    CHECK_THROWS_AS(ExteriorModel(5), ResourceLimit);
}

TEST_CASE("hard Lefschetz") {
    for (int g = 0; g <= 4; ++g) CHECK(hard_lefschetz_holds(g));
}

TEST_CASE("Kleiman projectors") {
    for (int g = 1; g <= 3; ++g) {
        const auto family = kleiman_projectors(g);
        const std::size_t dim = std::size_t{1} << (2 * g);
        RatMatrix sum(dim, dim);
        for (auto it = family.matrices.begin(); it != family.matrices.end(); ++it) {
            const auto& [key, p] = *it;
            const int j = key.first - 2 * key.second;
            REQUIRE(is_idempotent(p));
            REQUIRE(BigInt(rank(p)) == binomial(2 * g, j) - binomial(2 * g, j - 2));
            for (auto jt = std::next(it); jt != family.matrices.end(); ++jt) {
                REQUIRE((p * jt->second).nonzeros() == 0);
                REQUIRE((jt->second * p).nonzeros() == 0);
            }
            sum = sum + p;
        }
        REQUIRE(sum == RatMatrix::identity(dim));
    }
    const auto g1 = kleiman_projectors(1);
    CHECK(rank(g1.matrices.at({1, 0})) == 2);
    CHECK(rank(g1.matrices.at({2, 1})) == 1);
    const auto g2 = kleiman_projectors(2);
    CHECK(rank(g2.matrices.at({2, 0})) == 5);
    CHECK(rank(g2.matrices.at({2, 1})) == 1);
}

TEST_CASE("orthogonal projectors") {
    const auto dot = RatMatrix::identity(2);
    CHECK(orthogonal_projector(SubspaceBasis::full(2), dot) == RatMatrix::identity(2));
    const auto e1 = SubspaceBasis::span(2, std::vector{SparseVec::unit(2, 0)});
    CHECK(orthogonal_projector(e1, dot) == RatMatrix::from_dense(2, 2, {Rat(1), Rat(0), Rat(0), Rat(0)}));
    const auto hyperbolic = RatMatrix::from_dense(2, 2, {Rat(0), Rat(1), Rat(1), Rat(0)});
    CHECK_THROWS_AS(orthogonal_projector(e1, hyperbolic), InvalidArgument);

    const ExteriorModel model(2);
    const auto pairing = model.cup_pairing();
    const auto p = orthogonal_projector(model.primitive_subspace(2), pairing);
    CHECK(is_idempotent(p));
    CHECK(rank(p) == 5);
    CHECK(p.transpose() * pairing == pairing * p);
    CHECK(p == kleiman_projectors(2).matrices.at({2, 0}));
}

TEST_CASE("Beauville weights") {
    const auto a = beauville_weight(2, 0, 2);
    CHECK(a.pullback_exp == 2);
    CHECK(a.pushforward_exp == 2);
    CHECK(beauville_weight(1, 0, 1).pullback_exp == 1);
    const auto b = beauville_weight(2, 1, 2);
    CHECK(b.motive_degree == 0);
    CHECK(b.pullback_exp == 0);
    CHECK(b.pushforward_exp == 4);
    CHECK_THROWS_AS(beauville_weight(1, 1, 2), InvalidArgument);
    CHECK_THROWS_AS(beauville_weight(7, 1, 2), InvalidArgument);
}

TEST_CASE("Molien series") {
    CHECK(molien_holomorphic_invariants(2, 1) == Polynomial{BigInt(1), BigInt(0), BigInt(1)});
    CHECK(to_string(molien_holomorphic_invariants(2, 1)) == "1 + t^2");
    CHECK(molien_holomorphic_invariants(1, 1) == Polynomial{BigInt(1)});
    for (int n = 1; n <= 4; ++n) {
        const auto p = molien_holomorphic_invariants(2, n);
        for (std::size_t k = 1; k < p.size(); k += 2) REQUIRE(p[k] == 0);
    }
    CHECK_THROWS_AS(molien_holomorphic_invariants(1, 10), ResourceLimit);
    CHECK_THROWS_AS(molien_holomorphic_invariants(0, 1), InvalidArgument);
    CHECK(to_string(Polynomial{}) == "0");
    CHECK(to_string(Polynomial{BigInt(-1), BigInt(0), BigInt(3)}) == "-1 + 3*t^2");
}

TEST_CASE("Molien series against a permutation-by-permutation sum") {
    for (int g = 1; g <= 3; ++g)
        for (int n = 1; n <= 4; ++n) {
            const auto p = molien_holomorphic_invariants(g, n);
            for (long t = -2; t <= 3; ++t) REQUIRE(evaluate(p, t) == molien_by_brute_force(g, n, t));
        }
}
