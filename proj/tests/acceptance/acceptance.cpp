// One line per acceptance criterion; exit status is nonzero if any fails.

#include "weylhodge/characters/classical.hpp"
#include "weylhodge/errors.hpp"
#include "weylhodge/hodgemotive/bigraded.hpp"
#include "weylhodge/hodgemotive/kleiman.hpp"
#include "weylhodge/hodgemotive/molien.hpp"
#include "weylhodge/lefschetz/coniveau.hpp"
#include "weylhodge/weylconstruct/weyl_construct.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace weylhodge;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    const char* id;
    const char* title;
    double budget_s;  // 0 for no time limit
    std::function<Verdict()> check;
};

struct GridCase {
    FormKind kind;
    int n;
    Partition lambda;
    std::size_t tensor_dim;
    HodgeProfile tensor_profile;
};

std::string describe(const GridCase& c) {
    return std::string(to_string(c.kind)) + std::to_string(2 * c.n) + " " + c.lambda.to_string();
}

const std::vector<GridCase>& grid() {
    static const std::vector<GridCase> cases = [] {
        std::vector<GridCase> out;
        for (auto kind : {FormKind::symplectic, FormKind::orthogonal})
            for (int n = 2; n <= 3; ++n) {
                const StandardRep rep(kind, n);
                for (int d = 1; d <= 4; ++d)
                    for (const auto& lambda : enumerate_partitions(d)) {
                        const SubspaceBasis s = s_lambda_space(rep, lambda);
                        out.push_back({kind, n, lambda, s.dim(), hodge_profile(rep, s)});
                    }
            }
        return out;
    }();
    return cases;
}

// Keeps at most a handful of failure descriptions.
void note(Verdict& v, const std::string& what) {
    if (v.pass) v.detail.clear();
    v.pass = false;
    if (std::count(v.detail.begin(), v.detail.end(), ';') < 6) v.detail += (v.detail.empty() ? "" : "; ") + what;
}

Verdict ac1() {
    Verdict v;
    for (const auto& c : grid()) {
        const auto w = weyl_construction_weight(c.kind, c.n, c.lambda);
        const std::int64_t dim = w ? weyl_dim(c.kind, c.n, *w) : 0;
        const HodgeProfile profile = w ? hodge_specialize(irr_character(c.kind, c.n, *w)) : HodgeProfile{};
        if (static_cast<std::int64_t>(c.tensor_dim) != dim || c.tensor_profile != profile)
            note(v, describe(c) + " tensor " + std::to_string(c.tensor_dim) + " vs character " + std::to_string(dim));
    }
    if (v.pass) v.detail = std::to_string(grid().size()) + " cases";
    return v;
}

Verdict ac2() {
    Verdict v;
    int nonzero = 0;
    for (const auto& c : grid()) {
        const auto cols = c.lambda.conjugate();
        const bool predicted = c.kind == FormKind::symplectic ? c.lambda[c.n] == 0 : cols[0] + cols[1] <= 2 * c.n;
        if (predicted != (c.tensor_dim > 0)) note(v, describe(c) + " verdict mismatch");
        nonzero += c.tensor_dim > 0;
    }
    if (v.pass) v.detail = std::to_string(nonzero) + " nonzero of " + std::to_string(grid().size());
    return v;
}

Verdict ac3() {
    Verdict v;
    int checked = 0;
    for (const auto& c : grid()) {
        if (c.tensor_dim == 0) continue;
        ++checked;
        if (!is_palindromic(c.tensor_profile)) note(v, describe(c) + " not Hodge symmetric");
        const int top = max_support(c.tensor_profile);
        if (top != c.lambda.size())
            note(v, describe(c) + " max p-q " + std::to_string(top) + " != |lambda| " + std::to_string(c.lambda.size()));
    }
    if (v.pass) v.detail = std::to_string(checked) + " nonzero spaces";
    return v;
}

Verdict ac4() {
    Verdict v;
    int tables = 0;
    for (int g = 1; g <= 3; ++g)
        for (int k = 0; k <= 2 * g; ++k) {
            AbelianDescriptor desc;
            desc.factors.push_back({AlbertType::I, 1, 1, g, 1, std::nullopt});
            const auto cert = coniveau_report(desc, 1, k);
            ++tables;
            for (int n = 0; 2 * n <= k; ++n)
                if (cert.table.dims_by_n.at(n) != primitive_filtration_dims(g, k, n))
                    note(v, "g=" + std::to_string(g) + " k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    if (v.pass) v.detail = std::to_string(tables) + " degree tables";
    return v;
}

Verdict ac5() {
    Verdict v;
    for (int g = 0; g <= 4; ++g)
        for (int i = 0; i <= g; ++i) {
            const int N = static_cast<int>(to_int64(binomial(g, i))) + 1;
            if (!sym_vanishing_check(g, i, N))
                note(v, "g=" + std::to_string(g) + " i=" + std::to_string(i) + " N=" + std::to_string(N));
        }
    if (v.pass) v.detail = "g <= 4, 0 <= i <= g";
    return v;
}

Verdict ac6() {
    Verdict v;
    for (int n = 1; n <= 4; ++n) {
        const Polynomial p = molien_holomorphic_invariants(2, n);
        for (std::size_t k = 1; k < p.size(); k += 2)
            if (p[k] != 0) note(v, "n=" + std::to_string(n) + " odd coefficient t^" + std::to_string(k));
        if (n == 1 && to_string(p) != "1 + t^2") note(v, "n=1 gives " + to_string(p));
    }
    if (v.pass) v.detail = "n = 1..4, n=1 is 1 + t^2";
    return v;
}

Verdict ac7() {
    Verdict v;
    int projectors = 0;
    for (int g = 1; g <= 3; ++g) {
        if (!hard_lefschetz_holds(g)) note(v, "hard Lefschetz fails for g=" + std::to_string(g));
        const auto family = kleiman_projectors(g);
        const std::size_t dim = std::size_t{1} << (2 * g);
        RatMatrix sum(dim, dim);
        for (auto it = family.matrices.begin(); it != family.matrices.end(); ++it) {
            const auto& [key, p] = *it;
            const std::string tag = "g=" + std::to_string(g) + " p^{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}";
            ++projectors;
            if (!is_idempotent(p)) note(v, tag + " not idempotent");
            const int j = key.first - 2 * key.second;
            if (BigInt(rank(p)) != binomial(2 * g, j) - binomial(2 * g, j - 2)) note(v, tag + " wrong rank");
            for (auto jt = std::next(it); jt != family.matrices.end(); ++jt)
                if ((p * jt->second).nonzeros() != 0 || (jt->second * p).nonzeros() != 0) note(v, tag + " not orthogonal");
            sum = sum + p;
        }
        if (!(sum == RatMatrix::identity(dim))) note(v, "g=" + std::to_string(g) + " projectors do not sum to 1");
    }
    if (v.pass) v.detail = std::to_string(projectors) + " projectors, g <= 3";
    return v;
}

Verdict ac8() {
    Verdict v;
    auto one = [](AlbertType t, int f, int d, int g) {
        AbelianDescriptor desc;
        desc.factors.push_back({t, f, d, g, 1, std::nullopt});
        return desc;
    };
    auto rules = [](const AbelianDescriptor& desc) {
        std::vector<std::string> out;
        for (const auto& x : validate(desc)) out.push_back(x.rule);
        return out;
    };
    if (!rules(one(AlbertType::I, 1, 1, 2)).empty()) note(v, "very general surface rejected");
    if (rules(one(AlbertType::III, 1, 2, 2)) != std::vector<std::string>{"type-III-strict"}) note(v, "type III strictness");
    if (rules(one(AlbertType::II, 2, 2, 2)) != std::vector<std::string>{"type-II-III-2f-divides-g"}) note(v, "2f | g");
    try {
        coniveau_report(one(AlbertType::IV, 1, 1, 2), 1, 2);
        note(v, "type IV accepted");
    } catch (const Refusal& e) {
        if (e.rule() != "type-IV-unsupported") note(v, "type IV refused under rule " + e.rule());
    }
    try {
        coniveau_report(one(AlbertType::III, 1, 2, 2), 1, 2);
        note(v, "invalid descriptor accepted");
    } catch (const DescriptorInvalid&) {
    }
    if (v.pass) v.detail = "3 validation examples + type IV refusal";
    return v;
}

Verdict ac9() {
    Verdict v;
    int audits = 0;
    for (auto kind : {FormKind::symplectic, FormKind::orthogonal})
        for (int n = kind == FormKind::symplectic ? 1 : 2; n <= 3; ++n)
            for (int d = 2; d <= 4; ++d) {
                const StandardRep rep(kind, n);
                const DecompositionAudit a = decomposition_audit(rep, d);
                ++audits;
                std::size_t power = 1;
                for (int i = 0; i < d; ++i) power *= static_cast<std::size_t>(2 * n);
                const bool ok = a.pass && a.intersection_dim == 0 && a.total_dim == power &&
                                a.traceless_dim + a.insertion_dim == power;
                if (!ok) note(v, std::string(to_string(kind)) + std::to_string(2 * n) + " d=" + std::to_string(d));
            }
    if (v.pass) v.detail = std::to_string(audits) + " audits";
    return v;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "Weyl-construction oracle equivalence", 120, ac1},
        {"AC2", "nonvanishing criteria for S_<lambda>V", 0, ac2},
        {"AC3", "Hodge symmetry and top support |lambda|", 0, ac3},
        {"AC4", "very general coniveau equals primitive filtration", 60, ac4},
        {"AC5", "holomorphic row of S^N h^{2g-i} vanishes at N = C(g,i)+1", 10, ac5},
        {"AC6", "Kummer-type Molien series has no odd terms", 30, ac6},
        {"AC7", "Lefschetz projector family and hard Lefschetz", 60, ac7},
        {"AC8", "Albert validation and type IV refusal", 0, ac8},
        {"AC9", "tensor power splits as traceless plus insertions", 0, ac9},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs > c.budget_s) note(v, "over time budget");
        failures += !v.pass;
        std::printf("%s %s  %s (%.2fs) [%s]\n", c.id, v.pass ? "PASS" : "FAIL", c.title, secs, v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
