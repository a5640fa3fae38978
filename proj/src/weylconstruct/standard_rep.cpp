#include "weylhodge/weylconstruct/standard_rep.hpp"

#include "weylhodge/errors.hpp"

#include <string>

namespace weylhodge {

StandardRep::StandardRep(FormKind kind, int n) : kind_(kind), n_(n) { check_group(kind, n); }

int StandardRep::label(int letter) const {
    if (letter < 0 || letter >= dim()) throw InvalidArgument("letter out of range");
    return letter < n_ ? letter + 1 : -(letter - n_ + 1);
}

int StandardRep::letter(int label) const {
    if (label == 0 || label > n_ || label < -n_) throw InvalidArgument("basis label out of range");
    return label > 0 ? label - 1 : n_ - label - 1;
}

int StandardRep::form(int a, int b) const {
    if (a < n_ && b == a + n_) return 1;
    if (a >= n_ && b == a - n_) return kind_ == FormKind::symplectic ? -1 : 1;
    return 0;
}

SparseVec StandardRep::psi() const {
    const std::size_t m = static_cast<std::size_t>(dim());
    std::vector<SparseVec::Entry> e;
    for (int i = 0; i < n_; ++i) {
        e.emplace_back(static_cast<std::size_t>(i) * m + (i + n_), Rat(1));
        e.emplace_back(static_cast<std::size_t>(i + n_) * m + i,
                       Rat(kind_ == FormKind::symplectic ? -1 : 1));
    }
    return SparseVec(m * m, std::move(e));
}

TensorWord TensorWord::from_index(const StandardRep& rep, int d, std::size_t index) {
    std::vector<int> letters(d);
    const std::size_t base = static_cast<std::size_t>(rep.dim());
    for (int k = d - 1; k >= 0; --k) {
        letters[k] = static_cast<int>(index % base);
        index /= base;
    }
    if (index != 0) throw InvalidArgument("word index out of range");
    return TensorWord(std::move(letters));
}

std::size_t TensorWord::index(const StandardRep& rep) const {
    std::size_t idx = 0;
    for (int a : letters_) {
        if (a < 0 || a >= rep.dim()) throw InvalidArgument("word letter out of range");
        idx = idx * static_cast<std::size_t>(rep.dim()) + static_cast<std::size_t>(a);
    }
    return idx;
}

std::vector<int> TensorWord::weight(const StandardRep& rep) const {
    std::vector<int> w(rep.rank(), 0);
    for (int a : letters_) w[rep.weight_coordinate(a)] += rep.hodge_sign(a);
    return w;
}

int TensorWord::hodge_eigenvalue(const StandardRep& rep) const {
    int s = 0;
    for (int a : letters_) s += rep.hodge_sign(a);
    return s;
}

std::size_t tensor_dim(const StandardRep& rep, int d) {
    if (d < 0) throw InvalidArgument("tensor degree must be nonnegative");
    std::size_t total = 1;
    for (int k = 0; k < d; ++k) {
        total *= static_cast<std::size_t>(rep.dim());
        if (total > kMaxTensorDim)
            throw ResourceLimit("tensor space (2n)^d exceeds " + std::to_string(kMaxTensorDim) + " basis words");
    }
    return total;
}

} // namespace weylhodge
