#pragma once

#include "weylhodge/exactlin/subspace.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace weylhodge {

/// H^*(A, Q) of a g-dimensional abelian variety as the exterior algebra on
/// H^1 = Q^{2g}. Basis vectors are wedge monomials indexed by bitmasks; bit i
/// stands for e_{i+1} and bit g+i for e_{-(i+1)}.
class ExteriorModel {
public:
    static constexpr int kMaxGenus = 4;

    /// Throws ResourceLimit for g > kMaxGenus.
    explicit ExteriorModel(int g);

    int genus() const noexcept { return g_; }
    std::size_t dim() const noexcept { return std::size_t{1} << (2 * g_); }
    /// Masks of the degree-k monomials, increasing.
    const std::vector<std::uint32_t>& degree_basis(int k) const { return by_degree_.at(k); }
    /// Sign and mask of a ∧ b, or sign 0 when the monomials overlap.
    static std::pair<int, std::uint32_t> wedge(std::uint32_t a, std::uint32_t b);

    SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
    /// The polarization class Σ e_i ∧ e_{-i} in degree 2.
    SparseVec polarization() const;
    /// Cup product with the polarization class, on the whole algebra.
    RatMatrix lefschetz_operator() const;
    /// Orthogonal projector onto degree k.
    RatMatrix degree_projector(int k) const;
    /// <a, b> = coefficient of the top monomial in a ∧ b.
    RatMatrix cup_pairing() const;

    /// ker(L^{g-k+1}) ∩ H^k, for 0 <= k <= g.
    SubspaceBasis primitive_subspace(int k) const;
    /// L^{g-i} : H^i -> H^{2g-i} as a square matrix in the degree bases.
    RatMatrix lefschetz_power_between(int i) const;

private:
    int g_;
    std::vector<std::vector<std::uint32_t>> by_degree_;
};

/// p^{k,r}: projectors onto L^r H^{k-2r}_prim, keyed by (k, r).
struct ProjectorFamily {
    int g = 0;
    std::map<std::pair<int, int>, RatMatrix> matrices;
};

/// Builds the family for dim A = g (g <= 4). Checks hard Lefschetz first and
/// throws std::logic_error if it fails.
ProjectorFamily kleiman_projectors(int g);

/// True iff L^{g-i} : H^i -> H^{2g-i} is invertible for all 0 <= i <= g.
bool hard_lefschetz_holds(int g);

/// Projector onto s that is self-adjoint for the pairing and kills the
/// pairing-orthogonal complement of s. Throws InvalidArgument when the
/// pairing restricted to s is degenerate.
RatMatrix orthogonal_projector(const SubspaceBasis& s, const RatMatrix& pairing);

struct BeauvilleWeight {
    int motive_degree;    // k = i - 2j, the piece h^k(A) carrying CH^i(A)_(j)
    int pullback_exp;     // [n]^* acts as n^k
    int pushforward_exp;  // [n]_* on 0-cycles of h^k(A) acts as n^{2g-k}
};

/// Throws InvalidArgument unless 0 <= i - 2j <= 2g.
BeauvilleWeight beauville_weight(int i, int j, int g);

} // namespace weylhodge
