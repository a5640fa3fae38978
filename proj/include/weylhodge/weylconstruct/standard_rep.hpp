#pragma once

#include "weylhodge/exactlin/matrix.hpp"
#include "weylhodge/form_kind.hpp"

#include <cstddef>
#include <vector>

namespace weylhodge {

/// Standard representation V of Sp(2n) or O(2n) with basis
/// e_1..e_n, e_{-1}..e_{-n}. Internally basis vectors are letters 0..2n-1 in
/// that order; letter a < n is e_{a+1}, letter a >= n is e_{-(a-n+1)}.
///
/// The invariant tensor is psi = Σ e_i⊗e_{-i} ∓ e_{-i}⊗e_i (minus for the
/// symplectic form), and Q is its dual form: Q(e_i, e_{-i}) = 1 and
/// Q(e_{-i}, e_i) = -1 (symplectic) or +1 (orthogonal).
class StandardRep {
public:
    /// Throws InvalidArgument for n < 1 or orthogonal n < 2.
    StandardRep(FormKind kind, int n);

    FormKind kind() const noexcept { return kind_; }
    int rank() const noexcept { return n_; }
    int dim() const noexcept { return 2 * n_; }

    /// Signed label ±i of a letter.
    int label(int letter) const;
    int letter(int label) const;

    int form(int a, int b) const;
    /// psi as a vector of V⊗V (index a * dim + b).
    SparseVec psi() const;

    /// +1 on the (1,0) half e_1..e_n, -1 on e_{-1}..e_{-n}.
    int hodge_sign(int letter) const noexcept { return letter < n_ ? 1 : -1; }
    /// Index i-1 of the Cartan coordinate ε_i the letter carries.
    int weight_coordinate(int letter) const noexcept { return letter < n_ ? letter : letter - n_; }

private:
    FormKind kind_;
    int n_;
};

/// A basis word e_{a_1}⊗…⊗e_{a_d} of V^⊗d, stored as letters. Words are
/// indexed lexicographically: index = Σ a_k (2n)^(d-k).
class TensorWord {
public:
    TensorWord() = default;
    explicit TensorWord(std::vector<int> letters) : letters_(std::move(letters)) {}

    static TensorWord from_index(const StandardRep& rep, int d, std::size_t index);
    std::size_t index(const StandardRep& rep) const;

    int length() const noexcept { return static_cast<int>(letters_.size()); }
    const std::vector<int>& letters() const noexcept { return letters_; }

    /// Weight in ε-coordinates (length n).
    std::vector<int> weight(const StandardRep& rep) const;
    /// Eigenvalue of H_0 = Σ H_i, i.e. p - q.
    int hodge_eigenvalue(const StandardRep& rep) const;

    friend bool operator==(const TensorWord&, const TensorWord&) = default;

private:
    std::vector<int> letters_;
};

/// Largest tensor space the engine will build explicitly.
inline constexpr std::size_t kMaxTensorDim = 1'000'000;

/// (2n)^d, throwing ResourceLimit above kMaxTensorDim.
std::size_t tensor_dim(const StandardRep& rep, int d);

} // namespace weylhodge
