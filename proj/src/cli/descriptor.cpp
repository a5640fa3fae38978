#include "weylhodge/cli/descriptor.hpp"

#include "weylhodge/errors.hpp"

#include <fstream>
#include <set>

namespace weylhodge::cli {

using nlohmann::json;

namespace {

int integer_field(const json& obj, const char* key, std::size_t index) {
    auto it = obj.find(key);
    const std::string where = "factors[" + std::to_string(index) + "]." + key;
    if (it == obj.end()) throw InvalidArgument("descriptor: missing field " + where);
    if (!it->is_number_integer()) throw InvalidArgument("descriptor: " + where + " must be an integer");
    const auto v = it->get<std::int64_t>();
    if (v < INT32_MIN || v > INT32_MAX) throw InvalidArgument("descriptor: " + where + " is out of range");
    return static_cast<int>(v);
}

} // namespace

AbelianDescriptor parse_descriptor(const json& doc) {
    if (!doc.is_object()) throw InvalidArgument("descriptor: top level must be an object");
    for (const auto& [key, value] : doc.items())
        if (key != "factors") throw InvalidArgument("descriptor: unknown key '" + key + "'");
    auto factors = doc.find("factors");
    if (factors == doc.end() || !factors->is_array()) throw InvalidArgument("descriptor: 'factors' must be an array");

    static const std::set<std::string> allowed{"type", "f", "d", "g", "m", "label"};
    AbelianDescriptor desc;
    for (std::size_t i = 0; i < factors->size(); ++i) {
        const json& obj = (*factors)[i];
        if (!obj.is_object()) throw InvalidArgument("descriptor: factors[" + std::to_string(i) + "] must be an object");
        for (const auto& [key, value] : obj.items())
            if (!allowed.count(key)) throw InvalidArgument("descriptor: unknown key '" + key + "' in factors[" + std::to_string(i) + "]");
        auto type = obj.find("type");
        if (type == obj.end() || !type->is_string())
            throw InvalidArgument("descriptor: factors[" + std::to_string(i) + "].type must be a string");
        AbelianFactor f;
        f.type = parse_albert_type(type->get<std::string>());
        f.f = integer_field(obj, "f", i);
        f.d = integer_field(obj, "d", i);
        f.g = integer_field(obj, "g", i);
        f.m = integer_field(obj, "m", i);
        if (auto label = obj.find("label"); label != obj.end()) {
            if (!label->is_string()) throw InvalidArgument("descriptor: factors[" + std::to_string(i) + "].label must be a string");
            f.label = label->get<std::string>();
        }
        desc.factors.push_back(std::move(f));
    }
    return desc;
}

AbelianDescriptor load_descriptor(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open descriptor file " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw InvalidArgument("descriptor " + path.string() + " is not valid JSON: " + e.what());
    }
    return parse_descriptor(doc);
}

json to_json(const AbelianDescriptor& desc) {
    json factors = json::array();
    for (const auto& f : desc.factors) {
        json obj{{"type", to_string(f.type)}, {"f", f.f}, {"d", f.d}, {"g", f.g}, {"m", f.m}};
        if (f.label) obj["label"] = *f.label;
        factors.push_back(std::move(obj));
    }
    return {{"factors", std::move(factors)}};
}

} // namespace weylhodge::cli
