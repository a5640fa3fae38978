#include "weylhodge/partitions/group_algebra.hpp"

#include "weylhodge/errors.hpp"

#include <algorithm>

namespace weylhodge {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
        if (x < 1 || x > degree() || seen[x]) throw InvalidArgument("not a permutation in one-line notation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> v(d);
    for (int i = 0; i < d; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(images_.size());
    for (int i = 1; i <= degree(); ++i) v[(*this)(i) - 1] = i;
    return Permutation(std::move(v));
}

int Permutation::sign() const {
    std::vector<bool> visited(images_.size(), false);
    int s = 1;
    for (int i = 1; i <= degree(); ++i) {
        if (visited[i - 1]) continue;
        int len = 0;
        for (int j = i; !visited[j - 1]; j = (*this)(j)) {
            visited[j - 1] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw InvalidArgument("composing permutations of different degree");
    std::vector<int> v(a.images_.size());
    for (int i = 1; i <= a.degree(); ++i) v[i - 1] = a(b(i));
    return Permutation(std::move(v));
}

// ---------------------------------------------------------------------------

GroupAlgebraElement GroupAlgebraElement::identity(int degree) {
    GroupAlgebraElement e(degree);
    e.add_term(Permutation::identity(degree), 1);
    return e;
}

Rat GroupAlgebraElement::coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rat& c) {
    if (p.degree() != degree_) throw InvalidArgument("permutation degree does not match group algebra");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree_ != b.degree_) throw InvalidArgument("group algebra degree mismatch");
    GroupAlgebraElement out(a.degree_);
    for (const auto& [p, x] : a.terms_)
        for (const auto& [q, y] : b.terms_) out.add_term(p * q, x * y);
    return out;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree_ != b.degree_) throw InvalidArgument("group algebra degree mismatch");
    GroupAlgebraElement out = a;
    for (const auto& [q, y] : b.terms_) out.add_term(q, y);
    return out;
}

GroupAlgebraElement operator*(const Rat& c, const GroupAlgebraElement& a) {
    GroupAlgebraElement out(a.degree_);
    for (const auto& [p, x] : a.terms_) out.add_term(p, c * x);
    return out;
}

namespace {

// Sum over the subgroup permuting each block of positions among itself,
// weighted by the sign when signed is set.
GroupAlgebraElement block_sum(int d, const std::vector<std::vector<int>>& blocks, bool signed_sum) {
    GroupAlgebraElement acc = GroupAlgebraElement::identity(d);
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        GroupAlgebraElement factor(d);
        std::vector<int> order = block;
        std::sort(order.begin(), order.end());
        std::vector<int> images = order;
        do {
            std::vector<int> v = Permutation::identity(d).images();
            for (std::size_t i = 0; i < order.size(); ++i) v[order[i] - 1] = images[i];
            Permutation p(std::move(v));
            factor.add_term(p, signed_sum ? p.sign() : 1);
        } while (std::next_permutation(images.begin(), images.end()));
        acc = acc * factor;
    }
    return acc;
}

} // namespace

GroupAlgebraElement row_symmetrizer(const FilledTableau& t) {
    return block_sum(t.size(), t.rows(), false);
}

GroupAlgebraElement column_antisymmetrizer(const FilledTableau& t) {
    return block_sum(t.size(), t.columns(), true);
}

GroupAlgebraElement young_projector(const FilledTableau& t) {
    if (!t.is_standard()) throw InvalidArgument("young_projector: tableau is not standard");
    const int d = t.size();
    const Rat scale = make_rat(static_cast<long>(count_standard_tableaux(t.shape())), 1) /
                      Rat(factorial(static_cast<unsigned long>(d)));
    return scale * (row_symmetrizer(t) * column_antisymmetrizer(t));
}

} // namespace weylhodge
