#include "weylhodge/form_kind.hpp"

#include "weylhodge/errors.hpp"

namespace weylhodge {

std::string_view to_string(FormKind k) {
    return k == FormKind::symplectic ? "sp" : "o";
}

FormKind parse_form_kind(std::string_view s) {
    if (s == "sp" || s == "symplectic") return FormKind::symplectic;
    if (s == "o" || s == "orthogonal") return FormKind::orthogonal;
    throw InvalidArgument("unknown form kind '" + std::string(s) + "' (expected sp or o)");
}

void check_group(FormKind kind, int n) {
    if (n < 1) throw InvalidArgument("group rank must be at least 1");
    if (kind == FormKind::orthogonal && n < 2)
        throw InvalidArgument("orthogonal group O(2n) requires n > 1");
}

bool is_palindromic(const HodgeProfile& profile) {
    for (const auto& [m, dim] : profile) {
        if (dim == 0) continue;
        auto it = profile.find(-m);
        if (it == profile.end() || it->second != dim) return false;
    }
    return true;
}

int max_support(const HodgeProfile& profile) {
    for (auto it = profile.rbegin(); it != profile.rend(); ++it)
        if (it->second != 0) return it->first;
    throw InvalidArgument("max_support of an empty profile");
}

std::int64_t total_dim(const HodgeProfile& profile) {
    std::int64_t s = 0;
    for (const auto& [m, dim] : profile) s += dim;
    return s;
}

HodgeProfile convolve(const HodgeProfile& a, const HodgeProfile& b) {
    HodgeProfile out;
    for (const auto& [x, da] : a)
        for (const auto& [y, db] : b)
            if (da * db != 0) out[x + y] += da * db;
    return out;
}

} // namespace weylhodge
