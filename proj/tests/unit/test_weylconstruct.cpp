#include "weylhodge/errors.hpp"
#include "weylhodge/weylconstruct/weyl_construct.hpp"

#include <catch_amalgamated.hpp>

using namespace weylhodge;

namespace {

// X_{ab} = e_a·Q(e_b, ·) + s·e_b·Q(e_a, ·) lies in the Lie algebra of the form
// (s = +1 symplectic, s = -1 orthogonal). Applies it as a derivation of V^⊗d.
SparseVec lie_action(const StandardRep& rep, int d, int a, int b, const SparseVec& v) {
    const int s = rep.kind() == FormKind::symplectic ? 1 : -1;
    std::vector<SparseVec::Entry> out;
    for (const auto& [idx, x] : v.entries()) {
        const auto word = TensorWord::from_index(rep, d, idx);
        for (int k = 0; k < d; ++k) {
            auto letters = word.letters();
            const int c = letters[k];
            if (int q = rep.form(b, c); q != 0) {
                letters[k] = a;
                out.emplace_back(TensorWord(letters).index(rep), x * q);
            }
            if (int q = rep.form(a, c); q != 0) {
                letters[k] = b;
                out.emplace_back(TensorWord(letters).index(rep), x * (s * q));
            }
        }
    }
    return SparseVec(v.dim(), std::move(out));
}

bool is_submodule(const StandardRep& rep, int d, const SubspaceBasis& s) {
    for (int a = 0; a < rep.dim(); ++a)
        for (int b = a; b < rep.dim(); ++b)
            for (const auto& v : s.vectors())
                if (!s.contains(lie_action(rep, d, a, b, v))) return false;
    return true;
}

} // namespace

TEST_CASE("standard representation conventions") {
    const StandardRep sp(FormKind::symplectic, 2);
    CHECK(sp.dim() == 4);
    CHECK(sp.label(0) == 1);
    CHECK(sp.label(3) == -2);
    CHECK(sp.letter(-1) == 2);
    CHECK(sp.form(0, 2) == 1);
    CHECK(sp.form(2, 0) == -1);
    CHECK(sp.form(0, 1) == 0);
    const StandardRep o(FormKind::orthogonal, 2);
    CHECK(o.form(2, 0) == 1);
    CHECK_THROWS_AS(StandardRep(FormKind::orthogonal, 1), InvalidArgument);
    CHECK_THROWS_AS(StandardRep(FormKind::symplectic, 0), InvalidArgument);
}

TEST_CASE("tensor word indexing round-trips") {
    const StandardRep rep(FormKind::symplectic, 2);
    for (std::size_t i = 0; i < 64; ++i) REQUIRE(TensorWord::from_index(rep, 3, i).index(rep) == i);
    const TensorWord w({0, 3, 1});
    CHECK(w.weight(rep) == std::vector<int>{1, 0});
    CHECK(w.hodge_eigenvalue(rep) == 1);
    CHECK_THROWS_AS(tensor_dim(StandardRep(FormKind::symplectic, 3), 8), ResourceLimit);
}

TEST_CASE("contraction and insertion") {
    for (auto kind : {FormKind::symplectic, FormKind::orthogonal})
        for (int n = 1 + (kind == FormKind::orthogonal); n <= 3; ++n) {
            const StandardRep rep(kind, n);
            const auto phi = contraction_matrix(rep, 2, {1, 2});
            const auto psi = insertion_matrix(rep, 2, {1, 2});
            CHECK(phi.rows() == 1);
            CHECK(psi.cols() == 1);
            CHECK(phi * psi == Rat(2 * n) * RatMatrix::identity(1));
            CHECK(psi.transpose().row(0) == rep.psi());
        }
    CHECK(index_pairs(3) == std::vector<IndexPair>{{1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(contraction_matrix(StandardRep(FormKind::symplectic, 1), 2, {2, 2}), InvalidArgument);
}

TEST_CASE("traceless dimensions") {
    const StandardRep sp2(FormKind::symplectic, 2);
    CHECK(traceless_subspace(sp2, 2).dim() == 15);
    CHECK(traceless_subspace(sp2, 3).dim() == 52);
    const StandardRep o2(FormKind::orthogonal, 2);
    CHECK(traceless_subspace(o2, 2).dim() == 15);
}

TEST_CASE("Schur images carry GL dimensions") {
    const StandardRep rep(FormKind::symplectic, 2);
    CHECK(schur_image(rep, FilledTableau::row_major(Partition{1, 1})).dim() == 6);
    CHECK(schur_image(rep, FilledTableau::row_major(Partition{2})).dim() == 10);
    CHECK(schur_image(rep, FilledTableau::row_major(Partition{2, 1})).dim() == 20);
    CHECK(schur_image(rep, FilledTableau({{1, 3}, {2}})).dim() == 20);
}

TEST_CASE("S_<lambda>V dimensions and profiles") {
    const StandardRep sp2(FormKind::symplectic, 2);
    const auto s11 = s_lambda_space(sp2, Partition{1, 1});
    CHECK(s11.dim() == 5);
    CHECK(hodge_profile(sp2, s11) == HodgeProfile{{-2, 1}, {0, 3}, {2, 1}});
    CHECK(s_lambda_space(sp2, Partition{2}).dim() == 10);
    CHECK(s_lambda_space(sp2, Partition{1, 1, 1}).dim() == 0);
    const StandardRep o2(FormKind::orthogonal, 2);
    CHECK(s_lambda_space(o2, Partition{1, 1}).dim() == 6);
    CHECK(s_lambda_space(o2, Partition{2}).dim() == 9);
    CHECK(s_lambda_space(o2, Partition{2, 2, 1}).dim() == 0);
    CHECK(hodge_profile(sp2, SubspaceBasis::full(4)) == HodgeProfile{{-1, 2}, {1, 2}});
}

TEST_CASE("S_<lambda>V is stable under the Lie algebra") {
    for (auto kind : {FormKind::symplectic, FormKind::orthogonal}) {
        const StandardRep rep(kind, 2);
        for (int d = 1; d <= 3; ++d) {
            REQUIRE(is_submodule(rep, d, traceless_subspace(rep, d)));
            for (const auto& lambda : enumerate_partitions(d)) REQUIRE(is_submodule(rep, d, s_lambda_space(rep, lambda)));
        }
    }
}

TEST_CASE("decomposition audit") {
    const auto a = decomposition_audit(StandardRep(FormKind::symplectic, 2), 2);
    CHECK(a.traceless_dim == 15);
    CHECK(a.insertion_dim == 1);
    CHECK(a.intersection_dim == 0);
    CHECK(a.total_dim == 16);
    CHECK(a.pass);
    CHECK_THROWS_AS(decomposition_audit(StandardRep(FormKind::symplectic, 2), 1), InvalidArgument);
}
