#pragma once

#include "weylhodge/exactlin/subspace.hpp"
#include "weylhodge/partitions/tableau.hpp"
#include "weylhodge/weylconstruct/standard_rep.hpp"

#include <vector>

// Explicit tensor model of Weyl's construction: contractions Φ_I and
// insertions Ψ_I on V^⊗d, the traceless part V^<d> = ∩ ker Φ_I, Schur
// images p_λ·V^⊗d and their intersections S_<λ>V.
//
// All of these maps commute with the maximal torus, so the heavy lifting is
// done one weight space at a time and reassembled into global bases. Global
// results are identical to what a dense computation on V^⊗d would give.

namespace weylhodge {

/// Tensor positions p < q, 1-based.
struct IndexPair {
    int p;
    int q;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// All pairs 1 <= p < q <= d in lexicographic order.
std::vector<IndexPair> index_pairs(int d);

/// Φ_I : V^⊗d -> V^⊗(d-2), word ↦ Q(v_p, v_q)·(word with p, q deleted).
RatMatrix contraction_matrix(const StandardRep& rep, int d, IndexPair pair);
/// Ψ_I : V^⊗(d-2) -> V^⊗d, inserting psi into positions p, q.
RatMatrix insertion_matrix(const StandardRep& rep, int d, IndexPair pair);

SubspaceBasis traceless_subspace(const StandardRep& rep, int d);
/// Image of the Young projector of t acting on V^⊗d by place permutations,
/// σ·(v_1⊗…⊗v_d) = v_{σ⁻¹(1)}⊗…⊗v_{σ⁻¹(d)}.
SubspaceBasis schur_image(const StandardRep& rep, const FilledTableau& t);
/// S_<λ>V, using the row-major filling of λ.
SubspaceBasis s_lambda_space(const StandardRep& rep, const Partition& lambda);

struct DecompositionAudit {
    std::size_t traceless_dim = 0;      // dim V^<d>
    std::size_t insertion_dim = 0;      // dim Σ_I im Ψ_I
    std::size_t intersection_dim = 0;   // dim of their intersection
    std::size_t total_dim = 0;          // (2n)^d
    bool pass = false;
};

/// Checks V^⊗d = V^<d> ⊕ Σ_I im Ψ_I by subspace arithmetic (d >= 2).
DecompositionAudit decomposition_audit(const StandardRep& rep, int d);

/// Dimension of s ∩ (H_0 = m) for each m. s must live in some V^⊗d.
HodgeProfile hodge_profile(const StandardRep& rep, const SubspaceBasis& s);

} // namespace weylhodge
