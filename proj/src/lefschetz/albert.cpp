#include "weylhodge/lefschetz/albert.hpp"

#include <set>

namespace weylhodge {

std::string_view to_string(AlbertType t) {
    switch (t) {
    case AlbertType::I: return "I";
    case AlbertType::II: return "II";
    case AlbertType::III: return "III";
    case AlbertType::IV: return "IV";
    }
    return "?";
}

AlbertType parse_albert_type(std::string_view s) {
    if (s == "I") return AlbertType::I;
    if (s == "II") return AlbertType::II;
    if (s == "III") return AlbertType::III;
    if (s == "IV") return AlbertType::IV;
    throw InvalidArgument("unknown Albert type '" + std::string(s) + "' (expected I, II, III or IV)");
}

std::string_view to_string(GroupKind k) {
    switch (k) {
    case GroupKind::Sp: return "Sp";
    case GroupKind::O: return "O";
    case GroupKind::GL: return "GL";
    }
    return "?";
}

int AbelianDescriptor::total_dimension() const {
    int s = 0;
    for (const auto& f : factors) s += f.m * f.g;
    return s;
}

namespace {

std::string describe(const AbelianFactor& a) {
    return "type " + std::string(to_string(a.type)) + " (f=" + std::to_string(a.f) + ", d=" + std::to_string(a.d) +
           ", g=" + std::to_string(a.g) + ")";
}

} // namespace

DescriptorInvalid::DescriptorInvalid(std::vector<Violation> violations)
    : Error(violations.empty() ? "invalid descriptor" : "invalid descriptor: " + violations.front().message),
      violations_(std::move(violations)) {}

std::vector<Violation> validate(const AbelianDescriptor& desc) {
    std::vector<Violation> out;
    if (desc.factors.empty()) out.push_back({"empty-descriptor", 0, "descriptor lists no factors"});
    std::set<std::string> labels;
    for (std::size_t i = 0; i < desc.factors.size(); ++i) {
        const AbelianFactor& a = desc.factors[i];
        auto report = [&](std::string rule, std::string what) {
            out.push_back({std::move(rule), i, describe(a) + ": " + std::move(what)});
        };
        if (a.f < 1 || a.d < 1 || a.g < 1 || a.m < 1) {
            report("positive-fields", "f, d, g and m must be positive integers");
            continue;
        }
        if (a.label && !labels.insert(*a.label).second) report("distinct-labels", "label '" + *a.label + "' repeats");
        switch (a.type) {
        case AlbertType::I:
            if (a.d != 1) report("type-I-d", "type I requires d = 1");
            if (a.g % a.f != 0) report("type-I-f-divides-g", "type I requires f | g");
            break;
        case AlbertType::II:
        case AlbertType::III:
            if (a.d != 2) report("type-II-III-d", "types II and III require d = 2");
            if (a.g % (2 * a.f) != 0) {
                report("type-II-III-2f-divides-g", "types II and III require 2f | g");
            } else if (a.type == AlbertType::III && 2 * a.f == a.g) {
                report("type-III-strict", "type III strict divisibility: 2f must divide g with 2f < g");
            }
            break;
        case AlbertType::IV:
            if ((2 * a.g) % (a.f * a.d * a.d) != 0) report("type-IV-fd2-divides-2g", "type IV requires fd^2 | 2g");
            if (a.g % (a.f * a.d) != 0) report("type-IV-df-divides-g", "type IV requires df | g for an integral GL rank");
            break;
        }
    }
    return out;
}

std::vector<EmbeddingGroup> lefschetz_group(const AbelianDescriptor& desc) {
    auto violations = validate(desc);
    if (!violations.empty()) throw DescriptorInvalid(std::move(violations));
    std::vector<EmbeddingGroup> out;
    for (std::size_t i = 0; i < desc.factors.size(); ++i) {
        const AbelianFactor& a = desc.factors[i];
        for (int e = 0; e < a.f; ++e) {
            switch (a.type) {
            case AlbertType::I: out.push_back({i, e, GroupKind::Sp, a.g / a.f, a.m}); break;
            case AlbertType::II: out.push_back({i, e, GroupKind::Sp, a.g / (2 * a.f), 2 * a.m}); break;
            case AlbertType::III: out.push_back({i, e, GroupKind::O, a.g / (2 * a.f), 2 * a.m}); break;
            case AlbertType::IV: out.push_back({i, e, GroupKind::GL, a.g / (a.d * a.f), a.d * a.m}); break;
            }
        }
    }
    return out;
}

} // namespace weylhodge
