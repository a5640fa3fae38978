#include "weylhodge/characters/weight_character.hpp"

#include "weylhodge/errors.hpp"
#include "weylhodge/exactlin/rational.hpp"

#include <algorithm>

namespace weylhodge {

WeightCharacter WeightCharacter::trivial(int rank) {
    WeightCharacter c(rank);
    c.add(Weight(rank, 0), 1);
    return c;
}

std::int64_t WeightCharacter::multiplicity(const Weight& w) const {
    auto it = mult_.find(w);
    return it == mult_.end() ? 0 : it->second;
}

std::int64_t WeightCharacter::total_mass() const {
    std::int64_t s = 0;
    for (const auto& [w, m] : mult_) s += m;
    return s;
}

bool WeightCharacter::is_effective() const {
    return std::all_of(mult_.begin(), mult_.end(), [](const auto& e) { return e.second > 0; });
}

void WeightCharacter::add(const Weight& w, std::int64_t m) {
    if (static_cast<int>(w.size()) != rank_) throw InvalidArgument("weight has wrong rank");
    if (m == 0) return;
    auto [it, inserted] = mult_.emplace(w, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0) mult_.erase(it);
    }
}

WeightCharacter operator+(const WeightCharacter& a, const WeightCharacter& b) {
    if (a.rank_ != b.rank_) throw InvalidArgument("character rank mismatch");
    WeightCharacter out = a;
    for (const auto& [w, m] : b.mult_) out.add(w, m);
    return out;
}

WeightCharacter operator-(const WeightCharacter& a, const WeightCharacter& b) {
    if (a.rank_ != b.rank_) throw InvalidArgument("character rank mismatch");
    WeightCharacter out = a;
    for (const auto& [w, m] : b.mult_) out.add(w, -m);
    return out;
}

WeightCharacter operator*(std::int64_t c, const WeightCharacter& a) {
    WeightCharacter out(a.rank_);
    if (c == 0) return out;
    for (const auto& [w, m] : a.mult_) out.mult_.emplace(w, c * m);
    return out;
}

namespace {

Weight shifted(const Weight& base, const Weight& w, int times) {
    Weight out = base;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += times * w[i];
    return out;
}

// Σ_j coefficient(m, j)·z^{j·w} applied weight by weight, truncated at degree k.
template <typename Coefficient>
WeightCharacter power_series(const WeightCharacter& a, int k, Coefficient coefficient) {
    if (k < 0) throw InvalidArgument("negative exterior/symmetric power");
    if (!a.is_effective()) throw InvalidArgument("power of a virtual character");
    std::vector<WeightCharacter> layers(k + 1, WeightCharacter(a.rank()));
    layers[0] = WeightCharacter::trivial(a.rank());
    for (const auto& [w, m] : a.multiplicities()) {
        std::vector<WeightCharacter> next(k + 1, WeightCharacter(a.rank()));
        for (int j = 0; j <= k; ++j)
            for (int t = 0; t <= j; ++t) {
                const BigInt c = coefficient(m, t);
                if (c == 0) continue;
                const std::int64_t ci = to_int64(c);
                for (const auto& [u, x] : layers[j - t].multiplicities()) next[j].add(shifted(u, w, t), ci * x);
            }
        layers = std::move(next);
    }
    return layers[k];
}

} // namespace

WeightCharacter tensor(const WeightCharacter& a, const WeightCharacter& b) {
    if (a.rank() != b.rank()) throw InvalidArgument("tensor: character rank mismatch");
    WeightCharacter out(a.rank());
    for (const auto& [u, x] : a.multiplicities())
        for (const auto& [v, y] : b.multiplicities()) out.add(shifted(u, v, 1), x * y);
    return out;
}

WeightCharacter wedge(const WeightCharacter& a, int k) {
    return power_series(a, k, [](std::int64_t m, int t) { return binomial(m, t); });
}

WeightCharacter sym(const WeightCharacter& a, int k) {
    return power_series(a, k, [](std::int64_t m, int t) { return binomial(m + t - 1, t); });
}

HodgeProfile hodge_specialize(const WeightCharacter& x) {
    HodgeProfile out;
    for (const auto& [w, m] : x.multiplicities()) {
        int s = 0;
        for (int c : w) s += c;
        out[s] += m;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace weylhodge
