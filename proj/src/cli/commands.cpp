#include "weylhodge/cli/commands.hpp"

#include "weylhodge/characters/classical.hpp"
#include "weylhodge/cli/descriptor.hpp"
#include "weylhodge/errors.hpp"
#include "weylhodge/hodgemotive/bigraded.hpp"
#include "weylhodge/hodgemotive/kleiman.hpp"
#include "weylhodge/hodgemotive/molien.hpp"
#include "weylhodge/lefschetz/coniveau.hpp"
#include "weylhodge/weylconstruct/weyl_construct.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace weylhodge::cli {

using nlohmann::json;

namespace {

struct Report {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::string status = "ok";
    std::vector<std::string> tsv_header;
    std::vector<std::vector<std::string>> tsv_rows;
    int exit_code = kExitOk;
};

json big(const BigInt& x) {
    if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
    return x.get_str();
}

json profile_json(const HodgeProfile& p) {
    json out = json::object();
    for (const auto& [eig, dim] : p) out[std::to_string(eig)] = dim;
    return out;
}

Partition parse_lambda(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("lambda: '" + item + "' is not an integer");
        }
        if (used != item.size()) throw InvalidArgument("lambda: '" + item + "' is not an integer");
        parts.push_back(v);
    }
    if (parts.empty()) throw InvalidArgument("lambda must be a comma-separated list of parts");
    Partition p(parts);
    if (p.size() == 0) throw InvalidArgument("lambda must have positive size");
    return p;
}

Report cmd_weyl(const std::string& kind_name, int n, const std::string& lambda_text, bool audit) {
    Report r;
    r.command = "weyl";
    r.inputs = {{"kind", kind_name}, {"n", n}, {"lambda", lambda_text}, {"audit", audit}};
    const FormKind kind = parse_form_kind(kind_name);
    const Partition lambda = parse_lambda(lambda_text);
    const StandardRep rep(kind, n);
    tensor_dim(rep, lambda.size());

    const SubspaceBasis space = s_lambda_space(rep, lambda);
    const HodgeProfile profile = hodge_profile(rep, space);
    const auto weight = weyl_construction_weight(kind, n, lambda);
    const std::int64_t char_dim = weight ? weyl_dim(kind, n, *weight) : 0;
    const HodgeProfile char_profile = weight ? hodge_specialize(irr_character(kind, n, *weight)) : HodgeProfile{};

    r.result = {
        {"dim", space.dim()},
        {"character_dim", char_dim},
        {"highest_weight", weight ? json(weight->to_string()) : json(nullptr)},
        {"profile", profile_json(profile)},
        {"character_profile", profile_json(char_profile)},
        {"hodge_symmetric", is_palindromic(profile)},
        {"agree", static_cast<std::int64_t>(space.dim()) == char_dim && profile == char_profile},
    };
    if (audit && lambda.size() >= 2) {
        const DecompositionAudit a = decomposition_audit(rep, lambda.size());
        r.result["audit"] = {{"traceless_dim", a.traceless_dim},
                             {"insertion_dim", a.insertion_dim},
                             {"intersection_dim", a.intersection_dim},
                             {"total_dim", a.total_dim},
                             {"pass", a.pass}};
    }
    r.tsv_header = {"p_minus_q", "dim"};
    for (const auto& [eig, dim] : profile) r.tsv_rows.push_back({std::to_string(eig), std::to_string(dim)});
    return r;
}

json violations_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back({{"rule", v.rule}, {"factor", v.factor}, {"message", v.message}});
    return out;
}

json groups_json(const std::vector<EmbeddingGroup>& groups) {
    json out = json::array();
    for (const auto& g : groups)
        out.push_back({{"factor", g.factor},
                       {"embedding", g.embedding},
                       {"kind", to_string(g.kind)},
                       {"rank", g.rank},
                       {"standard_dim", g.standard_dim()},
                       {"copies", g.copies}});
    return out;
}

void mark_violation(Report& r, const std::vector<Violation>& vs) {
    r.status = "violation";
    r.result = {{"violations", violations_json(vs)}};
    r.exit_code = kExitViolation;
    r.tsv_header = {"rule", "factor", "message"};
    for (const auto& v : vs) r.tsv_rows.push_back({v.rule, std::to_string(v.factor), v.message});
}

Report cmd_validate(const std::string& path) {
    Report r;
    r.command = "validate";
    r.inputs = {{"descriptor", path}};
    const AbelianDescriptor desc = load_descriptor(path);
    r.inputs["factors"] = to_json(desc)["factors"];
    const auto vs = validate(desc);
    if (!vs.empty()) {
        mark_violation(r, vs);
        return r;
    }
    const auto groups = lefschetz_group(desc);
    r.result = {{"violations", json::array()},
                {"total_dimension", desc.total_dimension()},
                {"lefschetz_group", groups_json(groups)}};
    r.tsv_header = {"factor", "embedding", "kind", "rank", "copies"};
    for (const auto& g : groups)
        r.tsv_rows.push_back({std::to_string(g.factor), std::to_string(g.embedding), std::string(to_string(g.kind)),
                              std::to_string(g.rank), std::to_string(g.copies)});
    return r;
}

Report cmd_coniveau(const std::string& path, int m, int k, unsigned threads) {
    Report r;
    r.command = "coniveau";
    r.inputs = {{"descriptor", path}, {"m", m}, {"k", k}};
    const AbelianDescriptor desc = load_descriptor(path);
    r.inputs["factors"] = to_json(desc)["factors"];
    const auto vs = validate(desc);
    if (!vs.empty()) {
        mark_violation(r, vs);
        return r;
    }
    try {
        const GHCCertificate cert = coniveau_report(desc, m, k, {threads});
        json constituents = json::array();
        bool symmetric = true;
        for (const auto& c : cert.constituents) {
            json label = json::array();
            for (const auto& w : c.label) label.push_back(w.to_string());
            constituents.push_back({{"label", label},
                                    {"multiplicity", big(c.multiplicity)},
                                    {"dim", big(c.dim)},
                                    {"hodge_level", c.hodge_level},
                                    {"coniveau", c.coniveau},
                                    {"hodge_symmetric", c.hodge_symmetric}});
            symmetric = symmetric && c.hodge_symmetric;
        }
        json table = json::object();
        for (const auto& [n, dim] : cert.table.dims_by_n) table[std::to_string(n)] = big(dim);
        r.result = {{"groups", groups_json(cert.groups)},
                    {"constituents", constituents},
                    {"table", table},
                    {"total_dim", big(cert.total_dim())},
                    {"expected_total_dim", big(binomial(2L * desc.total_dimension() * m, k))},
                    {"hodge_symmetric", symmetric}};
        r.tsv_header = {"n", "dim"};
        for (const auto& [n, dim] : cert.table.dims_by_n) r.tsv_rows.push_back({std::to_string(n), dim.get_str()});
    } catch (const Refusal& e) {
        r.status = "refused";
        r.result = {{"rule", e.rule()}, {"message", e.what()}};
        r.exit_code = kExitRefused;
        r.tsv_header = {"rule", "message"};
        r.tsv_rows = {{e.rule(), e.what()}};
    }
    return r;
}

Report cmd_symvanish(int g, int i, std::optional<int> N) {
    Report r;
    r.command = "symvanish";
    if (g < 0 || i < 0 || i > g) throw InvalidArgument("symvanish needs 0 <= i <= g");
    const BigInt threshold = binomial(g, i);
    const int power = N ? *N : to_int64(threshold) + 1;
    r.inputs = {{"g", g}, {"i", i}, {"N", N ? json(*N) : json(nullptr)}};
    const bool pass = sym_vanishing_check(g, i, power);
    const auto first = first_vanishing_power(g, i, power);
    r.result = {{"N", power},
                {"binomial_bound", big(threshold)},
                {"operation", i % 2 ? "super_sym" : "super_ext"},
                {"source_degree", 2 * g - i},
                {"pass", pass},
                {"first_vanishing_N", first ? json(*first) : json(nullptr)}};
    r.tsv_header = {"g", "i", "N", "pass", "first_vanishing_N"};
    r.tsv_rows = {{std::to_string(g), std::to_string(i), std::to_string(power), pass ? "true" : "false",
                   first ? std::to_string(*first) : "none"}};
    return r;
}

Report cmd_molien(int g, int n) {
    Report r;
    r.command = "molien";
    r.inputs = {{"g", g}, {"n", n}};
    const Polynomial p = molien_holomorphic_invariants(g, n);
    json coeffs = json::array();
    bool odd_zero = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        coeffs.push_back(big(p[k]));
        if (k % 2 == 1 && p[k] != 0) odd_zero = false;
    }
    r.result = {{"polynomial", to_string(p)}, {"coefficients", coeffs}, {"odd_coefficients_zero", odd_zero}};
    r.tsv_header = {"k", "h_k0_invariant"};
    for (std::size_t k = 0; k < p.size(); ++k) r.tsv_rows.push_back({std::to_string(k), p[k].get_str()});
    return r;
}

Report cmd_projectors(int g) {
    Report r;
    r.command = "projectors";
    r.inputs = {{"g", g}};
    const ProjectorFamily family = kleiman_projectors(g);
    const ExteriorModel model(g);
    bool idempotent = true;
    bool orthogonal = true;
    RatMatrix sum(model.dim(), model.dim());
    json ranks = json::array();
    r.tsv_header = {"k", "r", "rank", "expected"};
    for (auto it = family.matrices.begin(); it != family.matrices.end(); ++it) {
        const auto& [key, p] = *it;
        idempotent = idempotent && is_idempotent(p);
        for (auto jt = std::next(it); jt != family.matrices.end(); ++jt)
            orthogonal = orthogonal && (p * jt->second).nonzeros() == 0 && (jt->second * p).nonzeros() == 0;
        sum = sum + p;
        const std::size_t rk = rank(p);
        const int j = key.first - 2 * key.second;
        const BigInt expected = binomial(2 * g, j) - binomial(2 * g, j - 2);
        ranks.push_back({{"k", key.first}, {"r", key.second}, {"rank", rk}, {"expected", big(expected)}});
        r.tsv_rows.push_back({std::to_string(key.first), std::to_string(key.second), std::to_string(rk), expected.get_str()});
    }
    r.result = {{"model_dim", model.dim()},
                {"idempotent", idempotent},
                {"orthogonal", orthogonal},
                {"sum_is_identity", sum == RatMatrix::identity(model.dim())},
                {"hard_lefschetz", hard_lefschetz_holds(g)},
                {"ranks", ranks}};
    return r;
}

Report cmd_beauville(int g, int i, int j) {
    Report r;
    r.command = "beauville";
    r.inputs = {{"g", g}, {"i", i}, {"j", j}};
    const BeauvilleWeight w = beauville_weight(i, j, g);
    r.result = {{"motive_degree", w.motive_degree}, {"pullback_exp", w.pullback_exp}, {"pushforward_exp", w.pushforward_exp}};
    r.tsv_header = {"motive_degree", "pullback_exp", "pushforward_exp"};
    r.tsv_rows = {{std::to_string(w.motive_degree), std::to_string(w.pullback_exp), std::to_string(w.pushforward_exp)}};
    return r;
}

void emit(const Report& r, bool tsv, std::ostream& out) {
    if (tsv) {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
            out << '\n';
        };
        line(r.tsv_header);
        for (const auto& row : r.tsv_rows) line(row);
        return;
    }
    const json envelope = {{"command", r.command},
                           {"inputs", r.inputs},
                           {"result", r.result},
                           {"status", r.status},
                           {"engine_version", kEngineVersion}};
    out << envelope.dump(2) << '\n';
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weyl-construction and Hodge-coniveau engine for abelian varieties", "weylhodge"};
    app.require_subcommand(1);
    bool tsv = false;
    app.add_flag("--tsv", tsv, "Render the main table as tab-separated values");
    app.fallthrough();
    app.set_version_flag("--version", kEngineVersion);

    std::function<Report()> action;

    std::string kind, lambda;
    int n = 0;
    bool audit = false;
    auto* weyl = app.add_subcommand("weyl", "Dimension and Hodge profile of S_<lambda>V, tensor model vs characters");
    weyl->add_option("--kind", kind, "sp or o")->required();
    weyl->add_option("--n", n, "Rank: V has dimension 2n")->required();
    weyl->add_option("--lambda", lambda, "Partition, comma separated, e.g. 2,1")->required();
    weyl->add_flag("--audit", audit, "Also audit V^{(x)d} = traceless + insertions");
    weyl->callback([&] { action = [&] { return cmd_weyl(kind, n, lambda, audit); }; });

    std::string descriptor;
    int m = 1, k = 0;
    unsigned threads = 1;
    auto* coniveau = app.add_subcommand("coniveau", "Coniveau certificate for H^k(A^m)");
    coniveau->add_option("--descriptor", descriptor, "Descriptor JSON file")->required();
    coniveau->add_option("--m", m, "Power of A")->default_val(1);
    coniveau->add_option("--k", k, "Cohomological degree")->required();
    coniveau->add_option("--threads", threads, "Worker threads")->default_val(1)->check(CLI::Range(1u, 256u));
    coniveau->callback([&] { action = [&] { return cmd_coniveau(descriptor, m, k, threads); }; });

    auto* val = app.add_subcommand("validate", "Check a descriptor and list its Lefschetz group");
    val->add_option("--descriptor", descriptor, "Descriptor JSON file")->required();
    val->callback([&] { action = [&] { return cmd_validate(descriptor); }; });

    int g = 0, i = 0, j = 0;
    std::optional<int> power;
    auto* sv = app.add_subcommand("symvanish", "Holomorphic row of powers of h^{2g-i}(A)");
    sv->add_option("--g", g)->required();
    sv->add_option("--i", i)->required();
    sv->add_option("--N", power, "Power (default C(g,i)+1)");
    sv->callback([&] { action = [&] { return cmd_symvanish(g, i, power); }; });

    auto* mol = app.add_subcommand("molien", "Invariant holomorphic forms on A^n / S_{n+1}");
    mol->add_option("--g", g)->required();
    mol->add_option("--n", n)->required();
    mol->callback([&] { action = [&] { return cmd_molien(g, n); }; });

    auto* proj = app.add_subcommand("projectors", "Lefschetz projector family on H^*(A)");
    proj->add_option("--g", g)->required();
    proj->callback([&] { action = [&] { return cmd_projectors(g); }; });

    auto* bv = app.add_subcommand("beauville", "Eigenvalue exponents of [n] on CH^i(A)_(j)");
    bv->add_option("--g", g)->required();
    bv->add_option("--i", i)->required();
    bv->add_option("--j", j)->required();
    bv->callback([&] { action = [&] { return cmd_beauville(g, i, j); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, eo;
        const int code = app.exit(e, o, eo);
        out << o.str();
        err << eo.str();
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        const Report r = action();
        emit(r, tsv, out);
        return r.exit_code;
    } catch (const DescriptorInvalid& e) {
        err << "error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const Refusal& e) {
        err << "refused [" << e.rule() << "]: " << e.what() << '\n';
        return kExitRefused;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitResource;
    }
}

} // namespace weylhodge::cli
