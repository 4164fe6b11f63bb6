#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2forge/forms.hpp"
#include "g2forge/matrix.hpp"

namespace g2forge {

struct Bracket {
    int i, j, k;  // 1-based: [e_i, e_j] has coefficient c on e_k
    QuadScalar c;
};

class LieAlgebraData {
public:
    LieAlgebraData() = default;
    explicit LieAlgebraData(int dim, std::string name = "");

    static LieAlgebraData abelian(int dim);
    static LieAlgebraData from_brackets(int dim, const std::vector<Bracket>& br, std::string name = "");

    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const Matrix& gram() const { return gram_; }
    void set_gram(const Matrix& g);

    // 0-based structure constant c_{ij}^k
    const QuadScalar& c(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }
    // Sets c_{ij}^k and c_{ji}^k = -value.
    void set(int i, int j, int k, const QuadScalar& value);

    Vec bracket(const Vec& x, const Vec& y) const;
    Vec bracket_basis(int i, int j) const;
    Matrix ad(int i) const;
    Matrix ad(const Vec& x) const;
    bool is_abelian() const;
    std::vector<Bracket> nonzero_brackets() const;  // i < j, 1-based

    // Scale all structure constants by s.
    LieAlgebraData scaled(const QuadScalar& s) const;

    friend bool operator==(const LieAlgebraData& a, const LieAlgebraData& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
    int n_ = 0;
    std::string name_;
    std::vector<QuadScalar> c_;
    Matrix gram_;
};

struct JacobiResult {
    bool ok = true;
    std::array<int, 3> triple{};  // 1-based witness
    Vec defect;
};
JacobiResult validate(const LieAlgebraData& alg);
void require_valid(const LieAlgebraData& alg);  // throws JacobiViolation

KForm ce_differential(const LieAlgebraData& alg, const KForm& a);
bool d_squared_zero(const LieAlgebraData& alg);

struct Predicates {
    bool is_nilpotent = false;
    bool is_unimodular = false;
    bool is_nice_basis = false;
    bool is_orthogonally_nice = false;
};
Predicates predicates(const LieAlgebraData& alg);

LieAlgebraData parse_salamon(const std::string& text, int dim_hint = 0);
std::string render_salamon(const LieAlgebraData& alg);

nlohmann::json algebra_to_json(const LieAlgebraData& alg);
LieAlgebraData algebra_from_json(const nlohmann::json& j);

// Is h (column j = h(e_j)) a bracket homomorphism a -> b?
bool is_bracket_homomorphism(const LinearMap& h, const LieAlgebraData& a, const LieAlgebraData& b);
// Bracket [x,y]_b transported: h^-1 [h x, h y]_b
LieAlgebraData transport(const LinearMap& h, const LieAlgebraData& a);

}  // namespace g2forge
