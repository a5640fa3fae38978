#include "weylhodge/lefschetz/coniveau.hpp"

#include "weylhodge/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace weylhodge {

BigInt GHCCertificate::total_dim() const {
    BigInt s = 0;
    for (const auto& c : constituents) s += c.multiplicity * c.dim;
    return s;
}

namespace {

FormKind form_of(GroupKind k) {
    if (k == GroupKind::Sp) return FormKind::symplectic;
    if (k == GroupKind::O) return FormKind::orthogonal;
    throw std::logic_error("GL has no invariant form");
}

// ∧^j of `copies` copies of the standard representation, decomposed.
struct WedgePiece {
    std::vector<Constituent> constituents;
};

struct GroupData {
    FormKind kind;
    int rank;
    int h1;  // copies × 2·rank
    std::vector<WedgePiece> wedges;  // index j = 0 … h1
};

std::vector<GroupData> prepare(const std::vector<EmbeddingGroup>& groups, int m, int k, unsigned threads) {
    std::vector<GroupData> data;
    std::vector<std::pair<std::size_t, int>> jobs;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& eg = groups[g];
        GroupData gd{form_of(eg.kind), eg.rank, eg.copies * m * 2 * eg.rank, {}};
        gd.wedges.resize(std::min(gd.h1, k) + 1);
        for (int j = 0; j <= std::min(gd.h1, k); ++j) jobs.emplace_back(g, j);
        data.push_back(std::move(gd));
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                auto [g, j] = jobs[i];
                GroupData& gd = data[g];
                const WeightCharacter h1 = static_cast<std::int64_t>(groups[g].copies * m) * std_character(gd.kind, gd.rank);
                gd.wedges[j].constituents = decompose(wedge(h1, j), gd.kind, gd.rank);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return data;
}

struct ProfileCache {
    std::map<std::pair<std::size_t, DominantWeight>, HodgeProfile> profiles;

    const HodgeProfile& get(std::size_t g, const GroupData& gd, const DominantWeight& w) {
        auto key = std::pair{g, w};
        auto it = profiles.find(key);
        if (it == profiles.end())
            it = profiles.emplace(key, hodge_specialize(irr_character(gd.kind, gd.rank, w))).first;
        return it->second;
    }
};

struct Accumulated {
    BigInt multiplicity = 0;
    BigInt dim = 1;
};

void check_report_input(const AbelianDescriptor& desc, int m, int k) {
    if (m < 1) throw InvalidArgument("m must be at least 1");
    if (k < 0) throw InvalidArgument("cohomological degree must be nonnegative");
    auto violations = validate(desc);
    if (!violations.empty()) throw DescriptorInvalid(std::move(violations));
    for (const auto& f : desc.factors)
        if (f.type == AlbertType::IV)
            throw Refusal("type-IV-unsupported",
                          "coniveau certificates need every factor of type I, II or III; the Lefschetz-group "
                          "method is too coarse for powers of simple type IV factors");
    const long h1 = 2L * desc.total_dimension() * m;
    if (h1 > kMaxH1Dim)
        throw ResourceLimit("dim H^1(A^m) = " + std::to_string(h1) + " exceeds the limit " + std::to_string(kMaxH1Dim));
    if (k > h1) throw InvalidArgument("degree k exceeds dim H^1(A^m) = " + std::to_string(h1));
}

} // namespace

GHCCertificate coniveau_report(const AbelianDescriptor& desc, int m, int k, const ConiveauOptions& options) {
    check_report_input(desc, m, k);
    GHCCertificate cert;
    cert.m = m;
    cert.k = k;
    cert.groups = lefschetz_group(desc);
    for (const auto& eg : cert.groups)
        if (eg.rank > kMaxGroupRank)
            throw ResourceLimit("group rank " + std::to_string(eg.rank) + " exceeds the limit " + std::to_string(kMaxGroupRank));

    const std::vector<GroupData> data = prepare(cert.groups, m, k, options.threads);
    const std::size_t s = data.size();

    // Walk compositions k = k_1 + … + k_s and multiply out constituent lists.
    std::map<std::vector<DominantWeight>, Accumulated> merged;
    std::vector<const Constituent*> choice(s);
    std::function<void(std::size_t, int)> walk_parts;
    std::vector<int> parts(s);
    std::function<void(std::size_t, BigInt, BigInt)> walk_constituents = [&](std::size_t g, BigInt mult, BigInt dim) {
        if (g == s) {
            std::vector<DominantWeight> label;
            for (auto* c : choice) label.push_back(c->weight);
            auto [it, inserted] = merged.try_emplace(std::move(label));
            it->second.multiplicity += mult;
            it->second.dim = dim;
            return;
        }
        for (const auto& c : data[g].wedges[parts[g]].constituents) {
            choice[g] = &c;
            const BigInt d = weyl_dim(data[g].kind, data[g].rank, c.weight);
            walk_constituents(g + 1, mult * c.multiplicity, dim * d);
        }
    };
    walk_parts = [&](std::size_t g, int left) {
        if (g + 1 == s) {
            if (left > data[g].h1) return;
            parts[g] = left;
            walk_constituents(0, 1, 1);
            return;
        }
        for (int j = 0; j <= std::min(left, data[g].h1); ++j) {
            parts[g] = j;
            walk_parts(g + 1, left - j);
        }
    };
    walk_parts(0, k);

    ProfileCache cache;
    for (auto& [label, acc] : merged) {
        HodgeProfile profile{{0, 1}};
        int lvl = 0;
        for (std::size_t g = 0; g < s; ++g) {
            profile = convolve(profile, cache.get(g, data[g], label[g]));
            lvl += label[g].size();
        }
        if (max_support(profile) != lvl) throw std::logic_error("constituent level disagrees with its Hodge profile");
        if ((k - lvl) % 2 != 0 || lvl > k) throw std::logic_error("constituent level has the wrong parity");
        cert.constituents.push_back({label, acc.multiplicity, acc.dim, lvl, (k - lvl) / 2, is_palindromic(profile)});
    }

    cert.table.k = k;
    for (int n = 0; 2 * n <= k; ++n) {
        BigInt sum = 0;
        for (const auto& c : cert.constituents)
            if (c.coniveau >= n) sum += c.multiplicity * c.dim;
        cert.table.dims_by_n[n] = sum;
    }
    return cert;
}

bool hodge_symmetry_audit(const AbelianDescriptor& desc, int m, int k) {
    const GHCCertificate cert = coniveau_report(desc, m, k);
    return std::all_of(cert.constituents.begin(), cert.constituents.end(),
                       [](const CertificateConstituent& c) { return c.hodge_symmetric; });
}

} // namespace weylhodge
