#include "weylhodge/characters/classical.hpp"

#include "weylhodge/errors.hpp"
#include "weylhodge/exactlin/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace weylhodge {

DominantWeight::DominantWeight(FormKind kind, int n, std::vector<int> coords) : coords_(std::move(coords)) {
    check_group(kind, n);
    if (static_cast<int>(coords_.size()) != n)
        throw InvalidArgument("highest weight must have exactly n coordinates");
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] < 0) throw InvalidArgument("highest weight coordinates must be nonnegative");
        if (i > 0 && coords_[i] > coords_[i - 1]) throw InvalidArgument("highest weight must be weakly decreasing");
    }
    paired_ = kind == FormKind::orthogonal && coords_.back() > 0;
}

int DominantWeight::size() const {
    int s = 0;
    for (int c : coords_) s += c;
    return s;
}

std::string DominantWeight::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
    os << ')';
    if (paired_) os << '*';
    return os.str();
}

WeightCharacter std_character(FormKind kind, int n) {
    check_group(kind, n);
    WeightCharacter c(n);
    for (int i = 0; i < n; ++i) {
        Weight w(n, 0);
        w[i] = 1;
        c.add(w, 1);
        w[i] = -1;
        c.add(w, 1);
    }
    return c;
}

namespace {

// Root data for type C_n (symplectic) and D_n (orthogonal), standard inner
// product on ε-coordinates.
struct RootSystem {
    FormKind kind;
    int n;
    std::vector<Weight> positive;
    Weight rho;

    RootSystem(FormKind k, int rank) : kind(k), n(rank), rho(rank) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Weight a(n, 0), b(n, 0);
                a[i] = 1;
                a[j] = -1;
                b[i] = 1;
                b[j] = 1;
                positive.push_back(a);
                positive.push_back(b);
            }
        if (kind == FormKind::symplectic)
            for (int i = 0; i < n; ++i) {
                Weight a(n, 0);
                a[i] = 2;
                positive.push_back(a);
            }
        for (int i = 0; i < n; ++i) rho[i] = kind == FormKind::symplectic ? n - i : n - 1 - i;
    }

    // Representative of the Weyl orbit in the dominant chamber.
    Weight dominant(Weight w) const {
        int negatives = 0;
        bool has_zero = false;
        for (int& c : w) {
            if (c < 0) {
                ++negatives;
                c = -c;
            }
            if (c == 0) has_zero = true;
        }
        std::sort(w.begin(), w.end(), std::greater<>());
        if (kind == FormKind::orthogonal && negatives % 2 == 1 && !has_zero) w.back() = -w.back();
        return w;
    }

    // Coefficients of top - w on the simple roots, or nullopt if top - w is not
    // a nonnegative integral combination.
    std::optional<std::vector<int>> simple_coefficients(const Weight& top, const Weight& w) const {
        std::vector<int> prefix(n);
        int s = 0;
        for (int i = 0; i < n; ++i) {
            s += top[i] - w[i];
            prefix[i] = s;
        }
        std::vector<int> c(n);
        if (kind == FormKind::symplectic) {
            for (int i = 0; i + 1 < n; ++i) c[i] = prefix[i];
            if (prefix[n - 1] % 2 != 0) return std::nullopt;
            c[n - 1] = prefix[n - 1] / 2;
        } else {
            for (int i = 0; i + 2 < n; ++i) c[i] = prefix[i];
            const int delta_n = top[n - 1] - w[n - 1];
            const int twice_a = prefix[n - 2] - delta_n;
            const int twice_b = prefix[n - 2] + delta_n;
            if (twice_a % 2 != 0 || twice_b % 2 != 0) return std::nullopt;
            c[n - 2] = twice_a / 2;
            c[n - 1] = twice_b / 2;
        }
        if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; })) return std::nullopt;
        return c;
    }

    bool is_dominant(const Weight& w) const {
        for (int i = 0; i + 1 < n; ++i)
            if (w[i] < w[i + 1]) return false;
        if (kind == FormKind::symplectic) return w[n - 1] >= 0;
        return n < 2 || w[n - 2] >= std::abs(w[n - 1]);
    }
};

long inner(const Weight& a, const Weight& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

Weight plus(const Weight& a, const Weight& b, int times = 1) {
    Weight out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += times * b[i];
    return out;
}

void enumerate_dominant(const RootSystem& rs, int bound, Weight& prefix, std::vector<Weight>& out) {
    const int i = static_cast<int>(prefix.size());
    if (i == rs.n) {
        if (rs.is_dominant(prefix)) out.push_back(prefix);
        return;
    }
    const int hi = i == 0 ? bound : prefix.back();
    const bool last_signed = rs.kind == FormKind::orthogonal && i == rs.n - 1;
    const int lo = last_signed ? -hi : 0;
    for (int c = hi; c >= lo; --c) {
        prefix.push_back(c);
        enumerate_dominant(rs, bound, prefix, out);
        prefix.pop_back();
    }
}

// Multiplicities of the dominant weights of the irreducible SO/Sp module with
// highest weight top (top dominant for rs; for D_n its last entry may be < 0).
std::map<Weight, std::int64_t> freudenthal(const RootSystem& rs, const Weight& top) {
    int bound = 0;
    for (int c : top) bound = std::max(bound, std::abs(c));

    std::vector<std::pair<int, Weight>> layers;  // (depth, weight)
    std::vector<Weight> candidates;
    Weight prefix;
    enumerate_dominant(rs, bound, prefix, candidates);
    for (const auto& w : candidates) {
        auto c = rs.simple_coefficients(top, w);
        if (!c) continue;
        int depth = 0;
        for (int x : *c) depth += x;
        layers.emplace_back(depth, w);
    }
    std::sort(layers.begin(), layers.end());

    const Weight top_rho = plus(top, rs.rho);
    const long top_norm = inner(top_rho, top_rho);
    std::map<Weight, std::int64_t> mult;
    for (const auto& [depth, mu] : layers) {
        if (depth == 0) {
            mult[mu] = 1;
            continue;
        }
        long acc = 0;
        for (const auto& alpha : rs.positive)
            for (int k = 1;; ++k) {
                const Weight shifted = plus(mu, alpha, k);
                if (std::any_of(shifted.begin(), shifted.end(), [&](int c) { return std::abs(c) > bound; })) break;
                auto it = mult.find(rs.dominant(shifted));
                if (it != mult.end()) acc += 2 * it->second * inner(shifted, alpha);
            }
        const Weight mu_rho = plus(mu, rs.rho);
        const long denom = top_norm - inner(mu_rho, mu_rho);
        if (denom <= 0 || acc % denom != 0) throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
        if (acc != 0) mult[mu] = acc / denom;
    }
    return mult;
}

void add_orbit(const RootSystem& rs, const Weight& mu, std::int64_t m, WeightCharacter& out) {
    std::vector<int> abs_sorted(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) abs_sorted[i] = std::abs(mu[i]);
    std::sort(abs_sorted.begin(), abs_sorted.end());
    std::set<Weight> orbit;
    do {
        const int n = static_cast<int>(abs_sorted.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Weight w = abs_sorted;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) w[i] = -w[i];
            if (rs.dominant(w) == mu) orbit.insert(w);
        }
    } while (std::next_permutation(abs_sorted.begin(), abs_sorted.end()));
    for (const auto& w : orbit) out.add(w, m);
}

WeightCharacter connected_character(const RootSystem& rs, const Weight& top) {
    WeightCharacter out(rs.n);
    for (const auto& [mu, m] : freudenthal(rs, top)) add_orbit(rs, mu, m, out);
    return out;
}

// Weyl dimension formula Π (λ+ρ, α) / (ρ, α).
std::int64_t connected_dim(const RootSystem& rs, const Weight& top) {
    Rat d = 1;
    const Weight top_rho = plus(top, rs.rho);
    for (const auto& alpha : rs.positive) d *= make_rat(inner(top_rho, alpha), inner(rs.rho, alpha));
    if (d.get_den() != 1) throw std::logic_error("Weyl dimension formula produced a fraction");
    return to_int64(d.get_num());
}

Weight negate_last(Weight w) {
    w.back() = -w.back();
    return w;
}

// Key for peeling: prefix sums, then coordinates, compared lexicographically.
std::pair<std::vector<long>, Weight> peel_key(const Weight& w) {
    std::vector<long> prefix(w.size());
    long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) prefix[i] = s += w[i];
    return {prefix, w};
}

} // namespace

std::int64_t weyl_dim(FormKind kind, int n, const DominantWeight& lambda) {
    check_group(kind, n);
    const RootSystem rs(kind, n);
    const std::int64_t d = connected_dim(rs, lambda.coords());
    return lambda.paired() ? 2 * d : d;
}

WeightCharacter irr_character(FormKind kind, int n, const DominantWeight& lambda) {
    check_group(kind, n);
    const RootSystem rs(kind, n);
    WeightCharacter c = connected_character(rs, lambda.coords());
    if (lambda.paired()) c = c + connected_character(rs, negate_last(lambda.coords()));
    return c;
}

std::vector<Constituent> decompose(const WeightCharacter& x, FormKind kind, int n) {
    check_group(kind, n);
    if (x.rank() != n) throw InvalidArgument("decompose: character rank does not match the group");
    const RootSystem rs(kind, n);
    std::vector<Constituent> out;
    WeightCharacter rest = x;
    while (!rest.empty()) {
        if (!rest.is_effective()) throw InvalidArgument("decompose: negative multiplicity, input is not a character");
        const Weight* best = nullptr;
        for (const auto& [w, m] : rest.multiplicities())
            if (best == nullptr || peel_key(w) > peel_key(*best)) best = &w;
        const Weight top = *best;
        const std::int64_t m = rest.multiplicity(top);
        if (!rs.is_dominant(top) || top.back() < 0)
            throw InvalidArgument("decompose: highest surviving weight is not dominant, input is not a character");
        DominantWeight label(kind, n, top);
        rest = rest - m * irr_character(kind, n, label);
        out.push_back({std::move(label), m});
    }
    return out;
}

std::optional<DominantWeight> weyl_construction_weight(FormKind kind, int n, const Partition& lambda) {
    check_group(kind, n);
    if (kind == FormKind::symplectic) {
        if (lambda.num_parts() > n) return std::nullopt;
    } else {
        const auto cd = column_data(lambda);
        if (cd.first + cd.second > 2 * n) return std::nullopt;
    }
    Partition label = lambda;
    if (lambda.num_parts() > n) {
        auto cols = lambda.column_lengths();
        cols.front() = 2 * n - cols.front();
        std::sort(cols.begin(), cols.end(), std::greater<>());
        label = Partition(cols).conjugate();
    }
    std::vector<int> coords(n, 0);
    for (int i = 0; i < label.num_parts(); ++i) coords[i] = label[i];
    return DominantWeight(kind, n, std::move(coords));
}

std::int64_t weyl_construction_dim(FormKind kind, int n, const Partition& lambda) {
    const auto w = weyl_construction_weight(kind, n, lambda);
    return w ? weyl_dim(kind, n, *w) : 0;
}

} // namespace weylhodge
