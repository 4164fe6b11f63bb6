#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2forge/g2.hpp"
#include "g2forge/soliton.hpp"

namespace g2forge {

struct CatalogEntry {
    std::string name;
    std::vector<std::string> aliases;
    std::string description;
    LieAlgebraData alg{7};
    KForm phi{7, 3};
    int orientation = 1;
    nlohmann::json provenance = nlohmann::json::object();
    std::vector<std::string> notes;
    nlohmann::json errata = nlohmann::json::array();
    std::optional<nlohmann::json> expected;
};

// G2FORGE_CATALOG_DIR if set, else the directory baked in at build time.
std::string catalog_dir();

CatalogEntry entry_from_json(const nlohmann::json& j);
CatalogEntry load_entry(const std::string& path);
std::vector<CatalogEntry> load_catalog(const std::string& dir);  // sorted by name
std::optional<CatalogEntry> find_entry(const std::string& dir, const std::string& name);

// Textual renderings shared by reports and golden comparison.
nlohmann::json matrix_json(const Matrix& m);
std::string covector_text(const Vec& v);  // "-4*e2", "0"

struct FullReport {
    G2Structure g2;
    TorsionData torsion;
    std::optional<SemiAlgebraicSoliton> soliton;
    SolitonReport classification;
};
FullReport run_report(const CatalogEntry& e, std::optional<QuadScalar> lambda = std::nullopt);
nlohmann::json report_json(const FullReport& r);
nlohmann::json classification_json(const SolitonReport& r);

struct GoldenDiff {
    std::string field;
    std::string expected;
    std::string actual;
};
// Exact comparison of each field present in `expected` against the report.
std::vector<GoldenDiff> compare_golden(const nlohmann::json& expected, const FullReport& r);

// Matrix from {"diag": [...], "scale": s} or {"rows": [[...], ...]}.
Matrix matrix_from_json(const nlohmann::json& j, std::size_t n = 7);

}  // namespace g2forge
