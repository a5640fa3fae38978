#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace weylhodge {

/// Which bilinear form the standard representation preserves.
enum class FormKind { symplectic, orthogonal };

std::string_view to_string(FormKind k);
/// Accepts "sp"/"symplectic" and "o"/"orthogonal"; throws InvalidArgument.
FormKind parse_form_kind(std::string_view s);

/// Throws InvalidArgument for n < 1, and for orthogonal groups with n < 2.
void check_group(FormKind kind, int n);

/// Dimension of each H_0-eigenspace, keyed by the eigenvalue p - q.
using HodgeProfile = std::map<int, std::int64_t>;

bool is_palindromic(const HodgeProfile& profile);
/// Largest p - q with nonzero dimension; throws InvalidArgument when empty.
int max_support(const HodgeProfile& profile);
std::int64_t total_dim(const HodgeProfile& profile);
/// Product of the underlying graded spaces.
HodgeProfile convolve(const HodgeProfile& a, const HodgeProfile& b);

} // namespace weylhodge
