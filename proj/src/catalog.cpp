#include "g2forge/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "g2forge/errors.hpp"

#ifndef G2FORGE_CATALOG_DIR_DEFAULT
#define G2FORGE_CATALOG_DIR_DEFAULT "catalog"
#endif

namespace g2forge {

namespace fs = std::filesystem;

std::string catalog_dir() {
    if (const char* env = std::getenv("G2FORGE_CATALOG_DIR"); env && *env) return env;
    return G2FORGE_CATALOG_DIR_DEFAULT;
}

namespace {

QuadScalar scalar_of(const nlohmann::json& j) {
    if (j.is_number_integer()) return QuadScalar(j.get<long>());
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    throw Error(ErrorKind::ParseError, "expected a scalar string or integer, got " + j.dump());
}

KForm vector_form(const Vec& v) {
    KForm f(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) f.add_term(static_cast<Mask>(1u << i), v[i]);
    return f;
}

}  // namespace

Matrix matrix_from_json(const nlohmann::json& j, std::size_t n) {
    Matrix m(n, n);
    if (j.contains("diag")) {
        const auto& d = j.at("diag");
        if (d.size() != n) throw Error(ErrorKind::DimensionMismatch, "diag has " + std::to_string(d.size()) + " entries");
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_of(d[i]);
    } else if (j.contains("rows")) {
        const auto& rows = j.at("rows");
        if (rows.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix row count");
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix row length");
            for (std::size_t k = 0; k < n; ++k) m(i, k) = scalar_of(rows[i][k]);
        }
    } else {
        throw Error(ErrorKind::ParseError, "matrix needs \"diag\" or \"rows\"");
    }
    if (j.contains("scale")) m = m * scalar_of(j.at("scale"));
    return m;
}

nlohmann::json matrix_json(const Matrix& m) {
    auto out = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        out.push_back(row);
    }
    return out;
}

std::string covector_text(const Vec& v) { return vector_form(v).str(); }

CatalogEntry entry_from_json(const nlohmann::json& j) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.aliases = j.value("aliases", std::vector<std::string>{});
    e.description = j.value("description", std::string());
    e.alg = algebra_from_json(j.at("algebra"));
    e.alg.set_name(e.name);
    e.phi = parse_form(j.at("phi").get<std::string>(), e.alg.dim());
    e.orientation = j.value("orientation", 1);
    if (j.contains("provenance")) e.provenance = j.at("provenance");
    e.notes = j.value("notes", std::vector<std::string>{});
    if (j.contains("errata")) e.errata = j.at("errata");
    if (j.contains("expected")) e.expected = j.at("expected");
    return e;
}

CatalogEntry load_entry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(ex.byte, path + ": " + ex.what());
    }
    return entry_from_json(j);
}

std::vector<CatalogEntry> load_catalog(const std::string& dir) {
    std::vector<CatalogEntry> out;
    if (!fs::is_directory(dir)) throw Error(ErrorKind::InvalidArgument, "catalog directory not found: " + dir);
    for (const auto& f : fs::directory_iterator(dir))
        if (f.path().extension() == ".json") out.push_back(load_entry(f.path().string()));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
}

std::optional<CatalogEntry> find_entry(const std::string& dir, const std::string& name) {
    for (auto& e : load_catalog(dir))
        if (e.name == name || std::find(e.aliases.begin(), e.aliases.end(), name) != e.aliases.end()) return e;
    return std::nullopt;
}

FullReport run_report(const CatalogEntry& e, std::optional<QuadScalar> lambda) {
    FullReport r{build(e.alg, e.phi, e.orientation), {}, std::nullopt, {}};
    r.torsion = torsion(r.g2);
    r.soliton = find_semialgebraic_soliton(r.g2, r.torsion);
    if (!lambda && r.soliton) lambda = r.soliton->lambda;
    r.classification = classify(r.g2, r.torsion, lambda);
    return r;
}

nlohmann::json classification_json(const SolitonReport& r) {
    nlohmann::json j;
    j["case"] = to_string(r.div_case);
    j["outcome"] = to_string(r.outcome);
    j["div_tau_sq"] = covector_text(r.div_tau_sq);
    auto ker = nlohmann::json::array();
    for (const auto& v : r.ker_ric) ker.push_back(covector_text(v));
    j["ker_ric"] = ker;
    j["lambda_used"] = r.lambda_used ? nlohmann::json(r.lambda_used->str()) : nlohmann::json(nullptr);
    j["lambda_free"] = r.lambda_free;
    if (r.product) {
        j["witness"] = {{"u", covector_text(r.product->u)},
                        {"w", covector_text(r.product->w)},
                        {"q_u", r.product->qu.str()},
                        {"q_w", r.product->qw.str()}};
    }
    if (r.extension) {
        const auto& w = *r.extension;
        nlohmann::json x{{"v", covector_text(w.v)}, {"residual", covector_text(w.residual)}, {"parallel", w.parallel}};
        if (w.lhs) x["lhs"] = w.lhs->str();
        if (w.rhs) x["rhs"] = w.rhs->str();
        if (w.required_lambda) x["required_lambda"] = w.required_lambda->str();
        j["witness"] = x;
    }
    if (r.gaussian_coefficient) j["gaussian_coefficient"] = r.gaussian_coefficient->str();
    j["notes"] = r.notes;
    return j;
}

nlohmann::json report_json(const FullReport& r) {
    const auto& t = r.torsion;
    nlohmann::json j;
    j["name"] = r.g2.alg.name();
    j["algebra"] = render_salamon(r.g2.alg);
    j["phi"] = r.g2.phi.str();
    j["orientation"] = r.g2.orientation;
    j["star_phi"] = r.g2.to_input_coframe(hodge_star(r.g2.frame_phi, Matrix::identity(7), r.g2.orientation)).str();
    j["tau"] = r.g2.to_input_coframe(t.tau).str();
    j["tau_sq"] = matrix_json(t.tau_sq);
    j["ric"] = matrix_json(t.ric);
    j["Q"] = matrix_json(t.Q);
    j["scal"] = t.scal.str();
    j["norm_sq"] = t.norm_sq.str();
    j["theta_identity"] = check_theta_identity(r.g2, t);
    if (r.soliton) {
        j["lambda"] = r.soliton->lambda.str();
        j["soliton_D"] = matrix_json(r.soliton->D);
        j["soliton_solution_dim"] = r.soliton->solution_dim;
    } else {
        j["lambda"] = nullptr;
    }
    j["classification"] = classification_json(r.classification);
    return j;
}

std::vector<GoldenDiff> compare_golden(const nlohmann::json& expected, const FullReport& r) {
    std::vector<GoldenDiff> diffs;
    const auto& t = r.torsion;
    const auto& c = r.classification;
    auto form_field = [&](const std::string& key, const KForm& actual) {
        if (!expected.contains(key)) return;
        KForm want = parse_form(expected.at(key).get<std::string>(), 7);
        if (want != actual) diffs.push_back({key, want.str(), actual.str()});
    };
    auto matrix_field = [&](const std::string& key, const Matrix& actual) {
        if (!expected.contains(key)) return;
        Matrix want = matrix_from_json(expected.at(key));
        if (want != actual) diffs.push_back({key, matrix_json(want).dump(), matrix_json(actual).dump()});
    };
    auto scalar_field = [&](const std::string& key, const std::optional<QuadScalar>& actual) {
        if (!expected.contains(key)) return;
        QuadScalar want = scalar_of(expected.at(key));
        if (!actual || *actual != want) diffs.push_back({key, want.str(), actual ? actual->str() : "none"});
    };
    form_field("tau", r.g2.to_input_coframe(t.tau));
    form_field("star_phi", r.g2.to_input_coframe(hodge_star(r.g2.frame_phi, Matrix::identity(7), r.g2.orientation)));
    matrix_field("tau_sq", t.tau_sq);
    matrix_field("ric", t.ric);
    matrix_field("Q", t.Q);
    scalar_field("scal", t.scal);
    scalar_field("lambda", r.soliton ? std::optional<QuadScalar>(r.soliton->lambda) : std::nullopt);
    if (expected.contains("div_tau_sq")) form_field("div_tau_sq", vector_form(c.div_tau_sq));
    if (expected.contains("outcome")) {
        std::string want = expected.at("outcome").get<std::string>();
        if (want != to_string(c.outcome)) diffs.push_back({"outcome", want, to_string(c.outcome)});
    }
    if (expected.contains("witness")) {
        const auto& w = expected.at("witness");
        auto check_vec = [&](const char* key, const std::optional<Vec>& actual) {
            if (!w.contains(key)) return;
            KForm want = parse_form(w.at(key).get<std::string>(), 7);
            if (!actual || want != vector_form(*actual))
                diffs.push_back({std::string("witness.") + key, want.str(), actual ? covector_text(*actual) : "none"});
        };
        auto check_scalar = [&](const char* key, const std::optional<QuadScalar>& actual) {
            if (!w.contains(key)) return;
            QuadScalar want = scalar_of(w.at(key));
            if (!actual || *actual != want)
                diffs.push_back({std::string("witness.") + key, want.str(), actual ? actual->str() : "none"});
        };
        const auto* p = c.product ? &*c.product : nullptr;
        const auto* x = c.extension ? &*c.extension : nullptr;
        check_vec("u", p ? std::optional<Vec>(p->u) : std::nullopt);
        check_vec("w", p ? std::optional<Vec>(p->w) : std::nullopt);
        check_scalar("q_u", p ? std::optional<QuadScalar>(p->qu) : std::nullopt);
        check_scalar("q_w", p ? std::optional<QuadScalar>(p->qw) : std::nullopt);
        check_vec("v", x ? std::optional<Vec>(x->v) : std::nullopt);
        check_scalar("lhs", x ? x->lhs : std::nullopt);
        check_scalar("rhs", x ? x->rhs : std::nullopt);
        if (w.contains("parallel")) {
            bool want = w.at("parallel").get<bool>();
            if (!x || x->parallel != want)
                diffs.push_back({"witness.parallel", want ? "true" : "false", x ? (x->parallel ? "true" : "false") : "none"});
        }
    }
    return diffs;
}

}  // namespace g2forge
