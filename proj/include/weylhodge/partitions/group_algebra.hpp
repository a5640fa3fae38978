#pragma once

#include "weylhodge/exactlin/rational.hpp"
#include "weylhodge/partitions/tableau.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace weylhodge {

/// Permutation of {1..d} in one-line notation: images()[i-1] = σ(i).
/// Composition reads right to left: (σ∘τ)(i) = σ(τ(i)).
class Permutation {
public:
    Permutation() = default;
    /// Throws InvalidArgument unless the images form a permutation of 1..d.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int d);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const noexcept { return images_; }

    Permutation inverse() const;
    int sign() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);  // a∘b
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Element of Q[S_d], a finitely supported map permutation -> Rat.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int degree) : degree_(degree) {}
    static GroupAlgebraElement identity(int degree);

    int degree() const noexcept { return degree_; }
    const std::map<Permutation, Rat>& terms() const noexcept { return terms_; }
    Rat coefficient(const Permutation& p) const;

    void add_term(const Permutation& p, const Rat& c);

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const Rat& c, const GroupAlgebraElement& a);
    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    int degree_;
    std::map<Permutation, Rat> terms_;  // zero coefficients never stored
};

/// Sum of the permutations preserving each row of t.
GroupAlgebraElement row_symmetrizer(const FilledTableau& t);
/// Signed sum of the permutations preserving each column of t.
GroupAlgebraElement column_antisymmetrizer(const FilledTableau& t);

/// Idempotent (f^λ / d!) · a_t · b_t for a standard tableau t of shape λ.
GroupAlgebraElement young_projector(const FilledTableau& t);

} // namespace weylhodge
