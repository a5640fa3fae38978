#include "weylhodge/weylconstruct/weyl_construct.hpp"

#include "weylhodge/errors.hpp"
#include "weylhodge/partitions/group_algebra.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace weylhodge {

std::vector<IndexPair> index_pairs(int d) {
    std::vector<IndexPair> out;
    for (int p = 1; p <= d; ++p)
        for (int q = p + 1; q <= d; ++q) out.push_back({p, q});
    return out;
}

namespace {

void check_pair(int d, IndexPair pair) {
    if (pair.p < 1 || pair.p >= pair.q || pair.q > d)
        throw InvalidArgument("index pair must satisfy 1 <= p < q <= d");
}

std::vector<int> drop_pair(const std::vector<int>& letters, IndexPair pair) {
    std::vector<int> out;
    out.reserve(letters.size() - 2);
    for (int k = 0; k < static_cast<int>(letters.size()); ++k)
        if (k != pair.p - 1 && k != pair.q - 1) out.push_back(letters[k]);
    return out;
}

std::vector<int> insert_pair(const std::vector<int>& letters, IndexPair pair, int a, int b) {
    std::vector<int> out;
    out.reserve(letters.size() + 2);
    auto it = letters.begin();
    for (int k = 1; k <= static_cast<int>(letters.size()) + 2; ++k) {
        if (k == pair.p) out.push_back(a);
        else if (k == pair.q) out.push_back(b);
        else out.push_back(*it++);
    }
    return out;
}

// Words of V^⊗d grouped by torus weight; each list is sorted.
class WeightBlocks {
public:
    WeightBlocks(const StandardRep& rep, int d) : total_(tensor_dim(rep, d)) {
        for (std::size_t i = 0; i < total_; ++i)
            blocks_[TensorWord::from_index(rep, d, i).weight(rep)].push_back(i);
    }

    std::size_t total() const noexcept { return total_; }
    const std::map<std::vector<int>, std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }

    const std::vector<std::size_t>* find(const std::vector<int>& weight) const {
        auto it = blocks_.find(weight);
        return it == blocks_.end() ? nullptr : &it->second;
    }

    static std::size_t local_index(const std::vector<std::size_t>& block, std::size_t global) {
        auto it = std::lower_bound(block.begin(), block.end(), global);
        if (it == block.end() || *it != global) throw std::logic_error("word missing from its weight block");
        return static_cast<std::size_t>(it - block.begin());
    }

private:
    std::size_t total_;
    std::map<std::vector<int>, std::vector<std::size_t>> blocks_;
};

// V^<d> restricted to one weight block, in local coordinates.
SubspaceBasis local_traceless(const StandardRep& rep, int d, const std::vector<std::size_t>& block,
                              const std::vector<std::size_t>* lower_block) {
    const std::size_t cols = block.size();
    if (d < 2 || lower_block == nullptr) return SubspaceBasis::full(cols);
    const auto pairs = index_pairs(d);
    // Row (pair, lower word) collects Q(v_p, v_q) from each column word.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<SparseVec::Entry>> rows;
    for (std::size_t c = 0; c < cols; ++c) {
        const auto word = TensorWord::from_index(rep, d, block[c]);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const int q = rep.form(word.letters()[pairs[k].p - 1], word.letters()[pairs[k].q - 1]);
            if (q == 0) continue;
            const std::size_t target = TensorWord(drop_pair(word.letters(), pairs[k])).index(rep);
            rows[{k, WeightBlocks::local_index(*lower_block, target)}].emplace_back(c, Rat(q));
        }
    }
    std::vector<SparseVec> m;
    m.reserve(rows.size());
    for (auto& [key, entries] : rows) m.emplace_back(cols, std::move(entries));
    return kernel_basis(RatMatrix::from_rows(cols, std::move(m)));
}

// Image of the Young projector on one weight block, in local coordinates.
SubspaceBasis local_schur(const StandardRep& rep, int d, const std::vector<std::size_t>& block,
                          const std::vector<std::pair<std::vector<int>, Rat>>& action) {
    EchelonBuilder b(block.size());
    std::vector<int> moved(d);
    for (std::size_t c = 0; c < block.size(); ++c) {
        const auto word = TensorWord::from_index(rep, d, block[c]);
        std::map<std::size_t, Rat> acc;
        for (const auto& [inv, coef] : action) {
            for (int j = 0; j < d; ++j) moved[j] = word.letters()[inv[j] - 1];
            acc[TensorWord(moved).index(rep)] += coef;
        }
        std::vector<SparseVec::Entry> e;
        for (auto& [g, x] : acc)
            if (x != 0) e.emplace_back(WeightBlocks::local_index(block, g), std::move(x));
        b.add(SparseVec(block.size(), std::move(e)));
    }
    auto rows = b.rows();
    return SubspaceBasis::span(block.size(), rows);
}

std::vector<std::pair<std::vector<int>, Rat>> place_action(const FilledTableau& t) {
    // σ·w has letter w_{σ⁻¹(j)} at position j.
    std::vector<std::pair<std::vector<int>, Rat>> out;
    const GroupAlgebraElement projector = young_projector(t);
    for (const auto& [perm, coef] : projector.terms())
        out.emplace_back(perm.inverse().images(), coef);
    return out;
}

SubspaceBasis assemble(std::size_t ambient, const std::vector<std::pair<const std::vector<std::size_t>*, SubspaceBasis>>& parts) {
    std::vector<SparseVec> vecs;
    for (const auto& [block, local] : parts)
        for (const auto& v : local.vectors()) vecs.push_back(v.embed(*block, ambient));
    return SubspaceBasis::span(ambient, vecs);
}

int degree_of(const StandardRep& rep, std::size_t ambient) {
    int d = 0;
    std::size_t t = 1;
    while (t < ambient) {
        t *= static_cast<std::size_t>(rep.dim());
        ++d;
    }
    if (t != ambient) throw InvalidArgument("subspace ambient is not a tensor power of V");
    return d;
}

} // namespace

RatMatrix contraction_matrix(const StandardRep& rep, int d, IndexPair pair) {
    check_pair(d, pair);
    const std::size_t cols = tensor_dim(rep, d);
    const std::size_t rows = tensor_dim(rep, d - 2);
    std::vector<std::vector<SparseVec::Entry>> buf(rows);
    for (std::size_t c = 0; c < cols; ++c) {
        const auto word = TensorWord::from_index(rep, d, c);
        const int q = rep.form(word.letters()[pair.p - 1], word.letters()[pair.q - 1]);
        if (q == 0) continue;
        buf[TensorWord(drop_pair(word.letters(), pair)).index(rep)].emplace_back(c, Rat(q));
    }
    std::vector<SparseVec> out;
    out.reserve(rows);
    for (auto& b : buf) out.emplace_back(cols, std::move(b));
    return RatMatrix::from_rows(cols, std::move(out));
}

RatMatrix insertion_matrix(const StandardRep& rep, int d, IndexPair pair) {
    check_pair(d, pair);
    const std::size_t rows = tensor_dim(rep, d);
    const std::size_t cols = tensor_dim(rep, d - 2);
    const std::size_t m = static_cast<std::size_t>(rep.dim());
    const SparseVec psi = rep.psi();
    std::vector<SparseVec> columns;
    columns.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const auto word = TensorWord::from_index(rep, d - 2, c);
        std::vector<SparseVec::Entry> e;
        for (const auto& [ab, coef] : psi.entries()) {
            const int a = static_cast<int>(ab / m), b = static_cast<int>(ab % m);
            e.emplace_back(TensorWord(insert_pair(word.letters(), pair, a, b)).index(rep), coef);
        }
        columns.emplace_back(rows, std::move(e));
    }
    return RatMatrix::from_columns(rows, columns);
}

SubspaceBasis traceless_subspace(const StandardRep& rep, int d) {
    const WeightBlocks upper(rep, d);
    if (d < 2) return SubspaceBasis::full(upper.total());
    const WeightBlocks lower(rep, d - 2);
    std::vector<std::pair<const std::vector<std::size_t>*, SubspaceBasis>> parts;
    for (const auto& [weight, block] : upper.blocks())
        parts.emplace_back(&block, local_traceless(rep, d, block, lower.find(weight)));
    return assemble(upper.total(), parts);
}

SubspaceBasis schur_image(const StandardRep& rep, const FilledTableau& t) {
    const int d = t.size();
    const WeightBlocks blocks(rep, d);
    const auto action = place_action(t);
    std::vector<std::pair<const std::vector<std::size_t>*, SubspaceBasis>> parts;
    for (const auto& [weight, block] : blocks.blocks())
        parts.emplace_back(&block, local_schur(rep, d, block, action));
    return assemble(blocks.total(), parts);
}

SubspaceBasis s_lambda_space(const StandardRep& rep, const Partition& lambda) {
    const int d = lambda.size();
    const WeightBlocks upper(rep, d);
    std::optional<WeightBlocks> lower;
    if (d >= 2) lower.emplace(rep, d - 2);
    const auto action = place_action(FilledTableau::row_major(lambda));
    std::vector<std::pair<const std::vector<std::size_t>*, SubspaceBasis>> parts;
    for (const auto& [weight, block] : upper.blocks()) {
        auto image = local_schur(rep, d, block, action);
        if (image.is_zero()) continue;
        auto traceless = local_traceless(rep, d, block, lower ? lower->find(weight) : nullptr);
        parts.emplace_back(&block, intersect(image, traceless));
    }
    return assemble(upper.total(), parts);
}

DecompositionAudit decomposition_audit(const StandardRep& rep, int d) {
    if (d < 2) throw InvalidArgument("decomposition_audit requires d >= 2");
    const WeightBlocks upper(rep, d);
    const WeightBlocks lower(rep, d - 2);
    const auto pairs = index_pairs(d);
    const std::size_t m = static_cast<std::size_t>(rep.dim());
    const auto psi = rep.psi();

    DecompositionAudit audit;
    audit.total_dim = upper.total();
    for (const auto& [weight, block] : upper.blocks()) {
        const auto* lower_block = lower.find(weight);
        auto traceless = local_traceless(rep, d, block, lower_block);
        EchelonBuilder images(block.size());
        if (lower_block != nullptr) {
            for (const auto& pair : pairs)
                for (std::size_t u : *lower_block) {
                    const auto word = TensorWord::from_index(rep, d - 2, u);
                    std::vector<SparseVec::Entry> e;
                    for (const auto& [ab, coef] : psi.entries()) {
                        const int a = static_cast<int>(ab / m), b = static_cast<int>(ab % m);
                        const auto g = TensorWord(insert_pair(word.letters(), pair, a, b)).index(rep);
                        e.emplace_back(WeightBlocks::local_index(block, g), coef);
                    }
                    images.add(SparseVec(block.size(), std::move(e)));
                }
        }
        auto rows = images.rows();
        const auto image = SubspaceBasis::span(block.size(), rows);
        audit.traceless_dim += traceless.dim();
        audit.insertion_dim += image.dim();
        audit.intersection_dim += intersect(traceless, image).dim();
    }
    audit.pass = audit.intersection_dim == 0 && audit.traceless_dim + audit.insertion_dim == audit.total_dim;
    return audit;
}

HodgeProfile hodge_profile(const StandardRep& rep, const SubspaceBasis& s) {
    const int d = degree_of(rep, s.ambient_dim());
    std::vector<int> eigen(s.ambient_dim());
    for (std::size_t i = 0; i < eigen.size(); ++i) eigen[i] = TensorWord::from_index(rep, d, i).hodge_eigenvalue(rep);

    HodgeProfile profile;
    bool homogeneous = true;
    for (const auto& v : s.vectors()) {
        const int e0 = eigen[v.entries().front().first];
        if (!std::all_of(v.entries().begin(), v.entries().end(),
                         [&](const auto& e) { return eigen[e.first] == e0; })) {
            homogeneous = false;
            break;
        }
        ++profile[e0];
    }
    if (homogeneous) return profile;

    // General case: dim(s ∩ E_m) = dim s - rank of s projected off E_m.
    profile.clear();
    for (int m = -d; m <= d; m += 2) {
        std::vector<SparseVec> projected;
        for (const auto& v : s.vectors()) {
            std::vector<SparseVec::Entry> e;
            for (const auto& [i, x] : v.entries())
                if (eigen[i] != m) e.emplace_back(i, x);
            projected.emplace_back(s.ambient_dim(), std::move(e));
        }
        const auto r = rank(RatMatrix::from_rows(s.ambient_dim(), std::move(projected)));
        const auto dim = static_cast<std::int64_t>(s.dim() - r);
        if (dim != 0) profile[m] = dim;
    }
    return profile;
}

} // namespace weylhodge
