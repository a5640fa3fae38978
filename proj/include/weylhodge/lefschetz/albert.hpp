#pragma once

#include "weylhodge/errors.hpp"
#include "weylhodge/form_kind.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylhodge {

enum class AlbertType { I, II, III, IV };

std::string_view to_string(AlbertType t);
/// Accepts "I", "II", "III", "IV"; throws InvalidArgument.
AlbertType parse_albert_type(std::string_view s);

/// A simple isogeny factor B with multiplicity m in A ~ Π B_i^{m_i}.
struct AbelianFactor {
    AlbertType type = AlbertType::I;
    int f = 1;  // degree of the totally real field
    int d = 1;  // reduced degree of the division algebra over its center
    int g = 1;  // dim B
    int m = 1;  // multiplicity
    std::optional<std::string> label;

    friend bool operator==(const AbelianFactor&, const AbelianFactor&) = default;
};

struct AbelianDescriptor {
    std::vector<AbelianFactor> factors;

    /// Σ m_i·g_i.
    int total_dimension() const;
};

struct Violation {
    std::string rule;     // stable identifier, e.g. "type-III-strict"
    std::size_t factor;   // index into factors
    std::string message;
};

/// Every broken divisibility or shape constraint. Empty means valid.
std::vector<Violation> validate(const AbelianDescriptor& desc);

/// Raised by operations that need a valid descriptor.
class DescriptorInvalid : public Error {
public:
    explicit DescriptorInvalid(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

enum class GroupKind { Sp, O, GL };
std::string_view to_string(GroupKind k);

/// One complex embedding of the center of End(B): the group acting on the
/// corresponding summand of H^1(B^m) ⊗ C.
struct EmbeddingGroup {
    std::size_t factor;
    int embedding;
    GroupKind kind;
    /// n for Sp_{2n} and O_{2n}; the matrix size for GL.
    int rank;
    /// Copies of the standard representation (for GL, of the standard and of
    /// the contragredient each).
    int copies;

    int standard_dim() const { return kind == GroupKind::GL ? rank : 2 * rank; }
    /// Contribution to dim H^1 ⊗ C.
    int h1_contribution() const { return kind == GroupKind::GL ? 2 * copies * rank : copies * 2 * rank; }
    friend bool operator==(const EmbeddingGroup&, const EmbeddingGroup&) = default;
};

/// Throws DescriptorInvalid when validate reports violations.
std::vector<EmbeddingGroup> lefschetz_group(const AbelianDescriptor& desc);

} // namespace weylhodge
