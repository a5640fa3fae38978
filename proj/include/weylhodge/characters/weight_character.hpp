#pragma once

#include "weylhodge/form_kind.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace weylhodge {

/// Weight in the ε-basis of a rank-n Cartan subalgebra.
using Weight = std::vector<int>;

/// Finitely supported multiplicity function on Z^rank. Zero entries are never
/// stored; negative entries only arise transiently from subtraction.
class WeightCharacter {
public:
    explicit WeightCharacter(int rank) : rank_(rank) {}
    static WeightCharacter trivial(int rank);

    int rank() const noexcept { return rank_; }
    const std::map<Weight, std::int64_t>& multiplicities() const noexcept { return mult_; }
    std::int64_t multiplicity(const Weight& w) const;
    std::int64_t total_mass() const;
    bool empty() const noexcept { return mult_.empty(); }
    /// All multiplicities positive.
    bool is_effective() const;

    void add(const Weight& w, std::int64_t m);

    friend WeightCharacter operator+(const WeightCharacter& a, const WeightCharacter& b);
    friend WeightCharacter operator-(const WeightCharacter& a, const WeightCharacter& b);
    friend WeightCharacter operator*(std::int64_t c, const WeightCharacter& a);
    friend bool operator==(const WeightCharacter&, const WeightCharacter&) = default;

private:
    int rank_;
    std::map<Weight, std::int64_t> mult_;
};

WeightCharacter tensor(const WeightCharacter& a, const WeightCharacter& b);
/// Character of the k-th exterior power.
WeightCharacter wedge(const WeightCharacter& a, int k);
/// Character of the k-th symmetric power.
WeightCharacter sym(const WeightCharacter& a, int k);

/// Pushforward along w ↦ Σ w_i, the eigenvalue of H_0 = Σ H_i.
HodgeProfile hodge_specialize(const WeightCharacter& x);

} // namespace weylhodge
