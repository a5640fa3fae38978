#pragma once

#include "weylhodge/characters/classical.hpp"
#include "weylhodge/exactlin/rational.hpp"
#include "weylhodge/lefschetz/albert.hpp"

#include <map>
#include <vector>

namespace weylhodge {

/// n ↦ dim N^n H^k for n = 0 … k/2.
struct ConiveauTable {
    int k = 0;
    std::map<int, BigInt> dims_by_n;

    friend bool operator==(const ConiveauTable&, const ConiveauTable&) = default;
};

struct CertificateConstituent {
    /// Highest weight per embedding group, in lefschetz_group order.
    std::vector<DominantWeight> label;
    BigInt multiplicity;
    /// Dimension of one copy.
    BigInt dim;
    int hodge_level;
    int coniveau;
    bool hodge_symmetric;
};

struct GHCCertificate {
    int m = 0;
    int k = 0;
    std::vector<EmbeddingGroup> groups;
    std::vector<CertificateConstituent> constituents;
    ConiveauTable table;

    /// Σ multiplicity·dim.
    BigInt total_dim() const;
};

struct ConiveauOptions {
    unsigned threads = 1;
};

/// Upper bound on dim H^1(A^m) accepted by coniveau_report.
inline constexpr int kMaxH1Dim = 40;
inline constexpr int kMaxGroupRank = 5;

/// Decomposes H^k(A^m) ⊗ C under the Lefschetz group and tabulates coniveau.
/// Throws DescriptorInvalid for invalid input, Refusal("type-IV-unsupported")
/// when a type IV factor is present, and ResourceLimit when dim H^1(A^m)
/// exceeds kMaxH1Dim or a group has rank above kMaxGroupRank.
GHCCertificate coniveau_report(const AbelianDescriptor& desc, int m, int k, const ConiveauOptions& options = {});

/// True iff every constituent of H^k(A^m) has a palindromic Hodge profile.
bool hodge_symmetry_audit(const AbelianDescriptor& desc, int m, int k);

} // namespace weylhodge
