#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2forge/g2.hpp"

namespace g2forge {

// SU(3)-structure on a 6-dim algebra h, fixed to the model gauge.
struct SU3Data {
    LieAlgebraData h{6};
    KForm omega{6, 2};
    KForm rho_plus{6, 3};
    KForm rho_minus{6, 3};
    Matrix J;

    static SU3Data model(const LieAlgebraData& h);
};

// g = h + R e7 with [e7, X] = D X.
struct ExtensionSpec {
    SU3Data su3;
    Matrix D;

    ExtensionSpec(SU3Data s, Matrix d);
    Matrix S() const;  // (D + D^t)/2
    Matrix A() const;  // (D - D^t)/2
    Matrix B() const;  // matrix of *_h d_h rho^-
};

// Real 6x6 representation of a complex 3x3 matrix re + i im on (e1,e2),(e3,e4),(e5,e6).
Matrix real_representation(const Matrix& re, const Matrix& im);

// Form on h (dim 6) viewed on g (dim 7).
KForm extend_form(const KForm& a, int dim);

struct Extension {
    LieAlgebraData g{7};
    G2Structure g2;
};
// Throws NotADerivation naming the first failing pair.
Extension build_extension(const ExtensionSpec& spec);

struct ClosednessConditions {
    bool d_omega_zero = false;
    bool d_rho_plus_zero = false;
    bool theta_D_rho_plus_zero = false;
    bool all() const { return d_omega_zero && d_rho_plus_zero && theta_D_rho_plus_zero; }
};
ClosednessConditions closedness_conditions(const ExtensionSpec& spec);

// Closed-form 7x7 blocks; the last index is e7.
struct Prop45 {
    Matrix tau_sq;
    Matrix ric;
    QuadScalar scal;
    Matrix Q;
};
// Div_h(S) on h; the abelian shortcut returns 0 without touching the connection.
Vec divergence_S(const ExtensionSpec& spec, bool use_shortcut = true);
Prop45 prop45_formulas(const ExtensionSpec& spec);

struct HpwChecks {
    bool xi_xi = false;  // ric(e7,e7) = -tr S^2
    bool x_xi = false;   // ric(X,e7) = -Div S(X)
    bool x_x = false;    // ric(X,Y) = ric^H(X,Y) - tr S <SX,Y> - <[S,A]X,Y>
    bool ok() const { return xi_xi && x_xi && x_x; }
};
HpwChecks hpw_ricci_checks(const ExtensionSpec& spec);

enum class AlmostAbelianKind { NotClosed, TorsionFreeFlat, GradientOnlyAsProduct };
const char* to_string(AlmostAbelianKind k);

struct AlmostAbelianReport {
    AlmostAbelianKind kind = AlmostAbelianKind::NotClosed;
    QuadScalar tr_S2;
    QuadScalar scal_D;
    std::vector<QuadScalar> lambda_candidates;  // -2 scal_D, scal^H + 2 tr S^2
    Vec div_S;
    std::vector<std::string> notes;
};
AlmostAbelianReport classify_almost_abelian(const Matrix& D);

// {h: <algebra JSON>, D: [[...]], su3: "model"}
ExtensionSpec spec_from_json(const nlohmann::json& j);
nlohmann::json almost_abelian_json(const AlmostAbelianReport& r);

}  // namespace g2forge
