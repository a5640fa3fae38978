#pragma once

#include "weylhodge/exactlin/rational.hpp"

#include <map>
#include <optional>
#include <utility>

namespace weylhodge {

/// Hodge numbers h^{p,q} of a graded Hodge structure. Zero entries are not
/// stored.
class BigradedDims {
public:
    using Key = std::pair<int, int>;  // (p, q)

    BigradedDims() = default;
    /// The cohomology of a point: h^{0,0} = 1.
    static BigradedDims point();

    const std::map<Key, BigInt>& table() const noexcept { return table_; }
    BigInt at(int p, int q) const;
    void add(int p, int q, const BigInt& dim);
    bool empty() const noexcept { return table_.empty(); }

    BigInt total() const;
    /// Sub-table of total degree p + q == k.
    BigradedDims degree_piece(int k) const;
    /// The common total degree, or nullopt when empty or mixed.
    std::optional<int> single_degree() const;
    bool is_hodge_symmetric() const;
    /// Σ_p h^{p,0}.
    BigInt holomorphic_row() const;

    friend bool operator==(const BigradedDims&, const BigradedDims&) = default;

private:
    std::map<Key, BigInt> table_;
};

/// h^{p,q}(A) = C(g,p)·C(g,q) for an abelian variety of dimension g.
BigradedDims abelian_hodge(int g);

/// Table of a tensor product (convolution in (p, q)).
BigradedDims kunneth(const BigradedDims& a, const BigradedDims& b);

/// Graded-commutative powers of a table concentrated in one degree k. For odd
/// k the roles of symmetric and exterior powers on the underlying space swap.
/// Throw InvalidArgument on mixed-degree input or N < 0.
BigradedDims super_sym(const BigradedDims& a, int N);
BigradedDims super_ext(const BigradedDims& a, int N);

/// Ordinary symmetric / exterior powers of the underlying bigraded space.
BigradedDims plain_sym(const BigradedDims& a, int N);
BigradedDims plain_ext(const BigradedDims& a, int N);

/// max |p - q|; nullopt stands for the level -∞ of the zero structure.
std::optional<int> level(const BigradedDims& a);
/// (k - level) / 2, and k for the zero table. Throws on mixed degrees.
int coniveau_in_degree(const BigradedDims& a, int k);

/// True iff the (·,0) row of the relevant power of h^{2g-i}(A) vanishes:
/// super_sym for odd i, super_ext for even i. Requires 0 <= i <= g, N >= 1.
bool sym_vanishing_check(int g, int i, int N);
/// Smallest N >= 1 for which sym_vanishing_check holds, searching up to limit.
std::optional<int> first_vanishing_power(int g, int i, int limit);

/// dim of the n-th step of the primitive filtration on H^k(A), dim A = g.
BigInt primitive_filtration_dims(int g, int k, int n);

/// True iff the (·,0) row of super_ext(a, N) vanishes. a must sit in a single
/// even degree.
bool skew_vanishing(const BigradedDims& a, int N);

} // namespace weylhodge
