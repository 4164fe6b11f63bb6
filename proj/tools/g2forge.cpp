#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "g2forge/catalog.hpp"
#include "g2forge/errors.hpp"
#include "g2forge/extension.hpp"
#include "g2forge/soliton.hpp"

using namespace g2forge;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kInvalid = 1, kInconclusive = 2, kGoldenMismatch = 3;

// A target is a catalog name or alias, a catalog-format JSON file, or Salamon text.
struct Target {
    std::optional<CatalogEntry> entry;
    std::optional<LieAlgebraData> algebra;  // Salamon input without a 3-form
};

Target resolve(const std::string& arg, const std::string& phi_text, int orientation) {
    Target t;
    if (auto e = find_entry(catalog_dir(), arg)) {
        t.entry = *e;
    } else if (std::filesystem::is_regular_file(arg)) {
        t.entry = load_entry(arg);
    } else {
        LieAlgebraData a = parse_salamon(arg);
        require_valid(a);
        if (a.dim() == 7 || !phi_text.empty()) {
            CatalogEntry e;
            e.name = "input";
            e.alg = a;
            e.phi = phi_text.empty() ? model_phi() : parse_form(phi_text, a.dim());
            e.orientation = orientation;
            t.entry = e;
        } else {
            t.algebra = a;
        }
    }
    if (t.entry && !phi_text.empty() && t.entry->name != "input") {
        t.entry->phi = parse_form(phi_text, t.entry->alg.dim());
        t.entry->orientation = orientation;
    }
    return t;
}

json predicates_json(const LieAlgebraData& a) {
    auto p = predicates(a);
    return {{"nilpotent", p.is_nilpotent},
            {"unimodular", p.is_unimodular},
            {"nice", p.is_nice_basis},
            {"orthogonally_nice", p.is_orthogonally_nice}};
}

void print_kv(const json& j, const std::string& indent = "") {
    for (const auto& [k, v] : j.items()) {
        if (v.is_object()) {
            std::cout << indent << k << ":\n";
            print_kv(v, indent + "  ");
        } else if (v.is_array() && !v.empty() && v[0].is_array()) {
            std::cout << indent << k << ":\n";
            for (const auto& row : v) {
                std::cout << indent << "  [";
                for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? ", " : "") << row[i].get<std::string>();
                std::cout << "]\n";
            }
        } else if (v.is_string()) {
            std::cout << indent << k << ": " << v.get<std::string>() << "\n";
        } else {
            std::cout << indent << k << ": " << v.dump() << "\n";
        }
    }
}

void emit(const json& j, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        print_kv(j);
}

std::optional<QuadScalar> lambda_arg(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_scalar(s);
}

int cmd_check(const std::string& target, const std::string& phi, int orientation, bool as_json) {
    auto t = resolve(target, phi, orientation);
    json j;
    if (t.algebra) {
        j["name"] = "input";
        j["dim"] = t.algebra->dim();
        j["jacobi"] = true;
        j["predicates"] = predicates_json(*t.algebra);
        emit(j, as_json);
        return kOk;
    }
    const auto& e = *t.entry;
    j["name"] = e.name;
    j["jacobi"] = true;
    j["predicates"] = predicates_json(e.alg);
    auto g = build(e.alg, e.phi, e.orientation);
    j["positive"] = true;
    j["closed"] = g.closed;
    if (g.closed) j["torsion_free"] = torsion(g).tau.is_zero();
    emit(j, as_json);
    if (!g.closed) {
        std::cerr << "error: NotClosed: d phi = " << ce_differential(g.alg, g.phi).str() << "\n";
        return kInvalid;
    }
    return kOk;
}

int cmd_report(const std::string& target, const std::string& phi, int orientation, bool as_json, bool golden,
               const std::string& lambda) {
    auto t = resolve(target, phi, orientation);
    if (!t.entry) throw Error(ErrorKind::DimensionMismatch, "report needs a 7-dimensional algebra with a 3-form");
    auto r = run_report(*t.entry, lambda_arg(lambda));
    json j = report_json(r);
    if (!golden) {
        emit(j, as_json);
        return exit_code(r.classification) == 0 ? kOk : kInconclusive;
    }
    if (!t.entry->expected) {
        std::cerr << "error: no golden record for " << t.entry->name << "\n";
        return kInvalid;
    }
    auto diffs = compare_golden(*t.entry->expected, r);
    json g = json::array();
    for (const auto& d : diffs) g.push_back({{"field", d.field}, {"expected", d.expected}, {"actual", d.actual}});
    j["golden"] = {{"pass", diffs.empty()}, {"diffs", g}};
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << t.entry->name << ": golden " << (diffs.empty() ? "pass" : "FAIL") << " ("
                  << t.entry->expected->size() << " fields)\n";
        for (const auto& d : diffs)
            std::cout << "  " << d.field << "\n    expected: " << d.expected << "\n    actual:   " << d.actual << "\n";
    }
    return diffs.empty() ? kOk : kGoldenMismatch;
}

int cmd_classify(const std::string& target, const std::string& phi, int orientation, bool as_json,
                 const std::string& lambda) {
    auto t = resolve(target, phi, orientation);
    if (!t.entry) throw Error(ErrorKind::DimensionMismatch, "classify needs a 7-dimensional algebra with a 3-form");
    auto r = run_report(*t.entry, lambda_arg(lambda));
    json j = classification_json(r.classification);
    j["name"] = t.entry->name;
    emit(j, as_json);
    return exit_code(r.classification) == 0 ? kOk : kInconclusive;
}

int cmd_extend(const std::string& su3, const std::string& path, bool as_json) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    json spec_j;
    try {
        in >> spec_j;
    } catch (const json::parse_error& ex) {
        throw ParseError(ex.byte, path + ": " + ex.what());
    }
    if (spec_j.is_array()) spec_j = json{{"D", spec_j}};
    spec_j["su3"] = su3;
    auto spec = spec_from_json(spec_j);
    json j;
    auto cc = closedness_conditions(spec);
    j["closedness"] = {{"d_omega_zero", cc.d_omega_zero},
                       {"d_rho_plus_zero", cc.d_rho_plus_zero},
                       {"theta_D_rho_plus_zero", cc.theta_D_rho_plus_zero}};
    auto ext = build_extension(spec);
    j["algebra"] = render_salamon(ext.g);
    j["phi"] = ext.g2.phi.str();
    if (!cc.all()) {
        emit(j, as_json);
        std::cerr << "error: NotClosed: d phi = " << ce_differential(ext.g, ext.g2.phi).str() << "\n";
        return kInvalid;
    }
    auto t = torsion(ext.g2);
    auto p = prop45_formulas(spec);
    j["tau"] = t.tau.str();
    j["scal"] = t.scal.str();
    j["torsion_free"] = t.tau.is_zero();
    j["flat"] = t.ric.is_zero();
    j["block_formulas_match"] = {{"tau_sq", p.tau_sq == t.tau_sq},
                                 {"ric", p.ric == t.ric},
                                 {"scal", p.scal == t.scal},
                                 {"Q", p.Q == t.Q}};
    j["hpw_ricci"] = hpw_ricci_checks(spec).ok();
    if (spec.su3.h.is_abelian()) j["almost_abelian"] = almost_abelian_json(classify_almost_abelian(spec.D));
    emit(j, as_json);
    bool agree = p.tau_sq == t.tau_sq && p.ric == t.ric && p.scal == t.scal && p.Q == t.Q;
    return agree ? kOk : kInvalid;
}

int cmd_catalog_list(bool as_json) {
    auto entries = load_catalog(catalog_dir());
    json arr = json::array();
    for (const auto& e : entries)
        arr.push_back({{"name", e.name},
                       {"aliases", e.aliases},
                       {"description", e.description},
                       {"golden", e.expected.has_value()},
                       {"provenance", e.provenance}});
    if (as_json) {
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& e : arr) {
            std::cout << e["name"].get<std::string>();
            if (!e["aliases"].empty()) std::cout << " (" << e["aliases"][0].get<std::string>() << ")";
            std::cout << (e["golden"].get<bool>() ? "  [golden]" : "") << "  " << e["description"].get<std::string>()
                      << "\n";
        }
    }
    return kOk;
}

int cmd_parse(const std::string& text, const std::string& kind, int dim) {
    if (kind == "scalar") {
        std::cout << parse_scalar(text).str() << "\n";
    } else if (kind == "salamon") {
        auto a = parse_salamon(text, dim == 7 ? 0 : dim);
        require_valid(a);
        std::cout << render_salamon(a) << "\n";
    } else {
        std::cout << parse_form(text, dim).str() << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"g2forge: exact computations for closed G2-structures on Lie algebras"};
    app.require_subcommand(1);
    bool as_json = false, golden = false;
    std::string target, phi, lambda, su3 = "model", derivation, text, kind = "form";
    int orientation = 1, dim = 7;

    auto add_target = [&](CLI::App* c) {
        c->add_option("target", target, "catalog name, catalog JSON file, or Salamon text")->required();
        c->add_option("--phi", phi, "3-form overriding the entry's");
        c->add_option("--orientation", orientation, "volume orientation, +1 or -1")->check(CLI::IsMember({1, -1}));
        c->add_flag("--json", as_json, "JSON output");
    };
    auto* check = app.add_subcommand("check", "validate Jacobi, positivity, closedness; print predicates");
    add_target(check);
    auto* report = app.add_subcommand("report", "torsion, curvature, soliton and classification report");
    add_target(report);
    report->add_flag("--golden", golden, "compare against the catalog's expected record");
    report->add_option("--lambda", lambda, "soliton constant to use");
    auto* classify_cmd = app.add_subcommand("classify", "gradient soliton classification");
    add_target(classify_cmd);
    classify_cmd->add_option("--lambda", lambda, "soliton constant to use");
    auto* extend = app.add_subcommand("extend", "one-dimensional extension h + R e7");
    extend->add_option("--su3", su3, "SU(3) gauge")->check(CLI::IsMember({"model"}));
    extend->add_option("--derivation", derivation, "JSON: 6x6 matrix or {h, D}")->required();
    extend->add_flag("--json", as_json, "JSON output");
    auto* catalog = app.add_subcommand("catalog", "catalog operations");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list catalog entries");
    list->add_flag("--json", as_json, "JSON output");
    auto* parse = app.add_subcommand("parse", "parse and print canonical form");
    parse->add_option("text", text)->required();
    parse->add_option("--as", kind, "form, scalar or salamon")->check(CLI::IsMember({"form", "scalar", "salamon"}));
    parse->add_option("--dim", dim, "ambient dimension");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*check) return cmd_check(target, phi, orientation, as_json);
        if (*report) return cmd_report(target, phi, orientation, as_json, golden, lambda);
        if (*classify_cmd) return cmd_classify(target, phi, orientation, as_json, lambda);
        if (*extend) return cmd_extend(su3, derivation, as_json);
        if (*list) return cmd_catalog_list(as_json);
        if (*parse) return cmd_parse(text, kind, dim);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kOk;
}
