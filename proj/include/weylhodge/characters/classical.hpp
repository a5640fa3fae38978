#pragma once

#include "weylhodge/characters/weight_character.hpp"
#include "weylhodge/partitions/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Characters of Sp(2n) and O(2n) on the diagonal torus H_1..H_n.
//
// Irreducible O(2n) modules are labelled by partition-shaped highest weights.
// A weight with λ_n > 0 is "paired": its O(2n) module restricts to SO(2n) as
// the sum of the modules with highest weights (…, λ_n) and (…, -λ_n), and
// it is handled as one unit everywhere below.

namespace weylhodge {

/// Highest weight λ_1 >= … >= λ_n >= 0 for a rank-n classical group.
class DominantWeight {
public:
    /// Validates shape and length; sets paired for orthogonal λ_n > 0.
    DominantWeight(FormKind kind, int n, std::vector<int> coords);

    const std::vector<int>& coords() const noexcept { return coords_; }
    bool paired() const noexcept { return paired_; }
    /// Σ λ_i.
    int size() const;
    std::string to_string() const;

    friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

private:
    std::vector<int> coords_;
    bool paired_ = false;
};

/// {±ε_i}, each with multiplicity one.
WeightCharacter std_character(FormKind kind, int n);

std::int64_t weyl_dim(FormKind kind, int n, const DominantWeight& lambda);
/// Full weight multiplicities via Freudenthal's recursion on dominant weights.
WeightCharacter irr_character(FormKind kind, int n, const DominantWeight& lambda);

struct Constituent {
    DominantWeight weight;
    std::int64_t multiplicity;
};

/// Peels off the dominance-largest surviving weight until nothing is left.
/// Throws InvalidArgument when the input is not the character of a genuine
/// representation of the group.
std::vector<Constituent> decompose(const WeightCharacter& x, FormKind kind, int n);

/// Highest weight of S_<λ>V predicted by the classical theory, or nullopt when
/// the space vanishes: Sp(2n) needs λ_{n+1} = 0, O(2n) needs the first two
/// columns of λ to have total length at most 2n. For O(2n) and λ with more
/// than n rows the label of the associated partition is returned.
std::optional<DominantWeight> weyl_construction_weight(FormKind kind, int n, const Partition& lambda);

/// dim S_<λ>V from the character side (0 when it vanishes).
std::int64_t weyl_construction_dim(FormKind kind, int n, const Partition& lambda);

} // namespace weylhodge
