#include "g2forge/extension.hpp"

#include "g2forge/catalog.hpp"
#include "g2forge/errors.hpp"
#include "g2forge/riemann.hpp"

namespace g2forge {

SU3Data SU3Data::model(const LieAlgebraData& h) {
    if (h.dim() != 6) throw Error(ErrorKind::DimensionMismatch, "SU(3) data needs a 6-dimensional algebra");
    SU3Data s;
    s.h = h;
    s.omega = parse_form("e12 + e34 + e56", 6);
    s.rho_plus = parse_form("e135 - e146 - e236 - e245", 6);
    s.rho_minus = parse_form("-e246 + e235 + e145 + e136", 6);
    s.J = Matrix(6, 6);
    for (int k = 0; k < 3; ++k) {
        s.J(2 * k + 1, 2 * k) = 1;
        s.J(2 * k, 2 * k + 1) = -1;
    }
    return s;
}

ExtensionSpec::ExtensionSpec(SU3Data s, Matrix d) : su3(std::move(s)), D(std::move(d)) {
    if (D.rows() != 6 || D.cols() != 6) throw Error(ErrorKind::DimensionMismatch, "D must be 6x6");
}

Matrix ExtensionSpec::S() const { return (D + D.transpose()) * QuadScalar::rational(1, 2); }
Matrix ExtensionSpec::A() const { return (D - D.transpose()) * QuadScalar::rational(1, 2); }
Matrix ExtensionSpec::B() const { return two_form_matrix(hodge_star(ce_differential(su3.h, su3.rho_minus))); }

Matrix real_representation(const Matrix& re, const Matrix& im) {
    if (re.rows() != 3 || re.cols() != 3 || im.rows() != 3 || im.cols() != 3)
        throw Error(ErrorKind::DimensionMismatch, "complex matrix must be 3x3");
    Matrix out(6, 6);
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            out(2 * k, 2 * l) = re(k, l);
            out(2 * k, 2 * l + 1) = -im(k, l);
            out(2 * k + 1, 2 * l) = im(k, l);
            out(2 * k + 1, 2 * l + 1) = re(k, l);
        }
    return out;
}

KForm extend_form(const KForm& a, int dim) {
    KForm out(dim, a.degree());
    for (const auto& [m, c] : a.terms()) out.add_term(m, c);
    return out;
}

Extension build_extension(const ExtensionSpec& spec) {
    const auto& h = spec.su3.h;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            Vec lhs = spec.D * h.bracket_basis(i, j);
            Vec r1 = h.bracket(spec.D.column(i), unit_vector(6, j));
            Vec r2 = h.bracket(unit_vector(6, i), spec.D.column(j));
            for (int k = 0; k < 6; ++k)
                if (lhs[k] != r1[k] + r2[k])
                    throw Error(ErrorKind::NotADerivation, "D[e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
                                                               "] != [De" + std::to_string(i + 1) + ", e" +
                                                               std::to_string(j + 1) + "] + [e" + std::to_string(i + 1) +
                                                               ", De" + std::to_string(j + 1) + "]");
        }
    Extension e;
    e.g = LieAlgebraData(7, h.name().empty() ? "extension" : h.name() + "+D");
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = 0; k < 6; ++k)
                if (!h.c(i, j, k).is_zero()) e.g.set(i, j, k, h.c(i, j, k));
    for (int b = 0; b < 6; ++b)
        for (int a = 0; a < 6; ++a)
            if (!spec.D(a, b).is_zero()) e.g.set(6, b, a, spec.D(a, b));
    require_valid(e.g);
    KForm e7 = covector(7, 7);
    KForm phi = wedge(extend_form(spec.su3.omega, 7), e7) + extend_form(spec.su3.rho_plus, 7);
    e.g2 = build(e.g, phi);
    return e;
}

ClosednessConditions closedness_conditions(const ExtensionSpec& spec) {
    ClosednessConditions c;
    c.d_omega_zero = ce_differential(spec.su3.h, spec.su3.omega).is_zero();
    c.d_rho_plus_zero = ce_differential(spec.su3.h, spec.su3.rho_plus).is_zero();
    c.theta_D_rho_plus_zero = theta_action(spec.D, spec.su3.rho_plus).is_zero();
    return c;
}

Vec divergence_S(const ExtensionSpec& spec, bool use_shortcut) {
    if (use_shortcut && spec.su3.h.is_abelian()) return Vec(6);
    return divergence(spec.su3.h, spec.S());
}

namespace {

Matrix embed(const Matrix& m6) {
    Matrix out(7, 7);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out(i, j) = m6(i, j);
    return out;
}

}  // namespace

Prop45 prop45_formulas(const ExtensionSpec& spec) {
    if (!closedness_conditions(spec).all()) throw Error(ErrorKind::NotClosed, "closedness conditions fail for this spec");
    const Matrix& D = spec.D;
    const Matrix& J = spec.su3.J;
    Matrix Dt = D.transpose();
    Matrix S2 = D + Dt;
    Matrix B = spec.B();
    Matrix S = spec.S();
    QuadScalar half = QuadScalar::rational(1, 2), quarter = QuadScalar::rational(1, 4), third = QuadScalar::rational(1, 3);
    Matrix ricH = ricci(spec.su3.h);
    QuadScalar scalH = ricH.trace();
    QuadScalar trS = S.trace();
    QuadScalar trS2 = (S * S).trace();
    Vec divS = divergence_S(spec);

    Prop45 p;
    Matrix tau_block = -(S2 * S2) + J * S2 * B + B * J * S2 + B * B;
    p.tau_sq = embed(tau_block);

    Matrix P(7, 7);
    for (int i = 0; i < 6; ++i) {
        P(i, 6) = divS[i];
        P(6, i) = divS[i];
    }
    p.ric = embed(ricH + commutator(D, Dt) * half);
    p.ric(6, 6) = -((S2 * S2).trace() * quarter);
    p.ric = p.ric - P;

    p.scal = scalH - trS2;

    Matrix qH = ricH + commutator(D, Dt) * half - S2 * (S2.trace() * quarter) + tau_block * half -
                Matrix::identity(6) * ((scalH - trS * trS - trS2) * third);
    p.Q = embed(qH) - P;
    p.Q(6, 6) = -(scalH * third) + trS * trS * third - trS2 * QuadScalar::rational(2, 3);
    return p;
}

HpwChecks hpw_ricci_checks(const ExtensionSpec& spec) {
    auto ext = build_extension(spec);
    Matrix ric = ricci(ext.g);
    Matrix S = spec.S(), A = spec.A();
    Matrix ricH = ricci(spec.su3.h);
    Vec divS = divergence(spec.su3.h, S);
    QuadScalar trS = S.trace();
    HpwChecks c;
    c.xi_xi = ric(6, 6) == -(S * S).trace();
    c.x_xi = true;
    for (int i = 0; i < 6; ++i)
        if (ric(i, 6) != -divS[i] || ric(6, i) != -divS[i]) c.x_xi = false;
    Matrix pred = ricH - S * trS - commutator(S, A);
    c.x_x = true;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (ric(i, j) != pred(i, j)) c.x_x = false;
    return c;
}

const char* to_string(AlmostAbelianKind k) {
    switch (k) {
        case AlmostAbelianKind::NotClosed: return "NotClosed";
        case AlmostAbelianKind::TorsionFreeFlat: return "TorsionFreeFlat";
        case AlmostAbelianKind::GradientOnlyAsProduct: return "GradientOnlyAsProduct";
    }
    return "?";
}

AlmostAbelianReport classify_almost_abelian(const Matrix& D) {
    ExtensionSpec spec(SU3Data::model(LieAlgebraData::abelian(6)), D);
    AlmostAbelianReport r;
    Matrix S = spec.S();
    r.tr_S2 = (S * S).trace();
    r.div_S = divergence_S(spec);
    if (!closedness_conditions(spec).theta_D_rho_plus_zero) {
        r.kind = AlmostAbelianKind::NotClosed;
        r.notes.push_back("theta(D) rho+ != 0: D is not the real representation of an element of sl(3,C)");
        return r;
    }
    r.scal_D = -r.tr_S2;
    if (S.is_zero()) {
        r.kind = AlmostAbelianKind::TorsionFreeFlat;
        r.lambda_candidates = {QuadScalar()};
        r.notes.push_back("D antisymmetric: tau = 0 and the metric is flat; the soliton is steady");
        return r;
    }
    r.kind = AlmostAbelianKind::GradientOnlyAsProduct;
    r.lambda_candidates = {QuadScalar(-2) * r.scal_D, QuadScalar(2) * r.tr_S2};
    r.notes.push_back("both one-dimensional-extension sub-cases are eliminated; a gradient soliton must be a product");
    return r;
}

ExtensionSpec spec_from_json(const nlohmann::json& j) {
    std::string su3 = j.value("su3", std::string("model"));
    if (su3 != "model") throw Error(ErrorKind::InvalidArgument, "only the model SU(3) gauge is supported");
    LieAlgebraData h = j.contains("h") ? algebra_from_json(j.at("h")) : LieAlgebraData::abelian(6);
    Matrix D = matrix_from_json(j.at("D").is_array() ? nlohmann::json{{"rows", j.at("D")}} : j.at("D"), 6);
    return ExtensionSpec(SU3Data::model(h), D);
}

nlohmann::json almost_abelian_json(const AlmostAbelianReport& r) {
    nlohmann::json j;
    j["outcome"] = to_string(r.kind);
    j["tr_S2"] = r.tr_S2.str();
    j["scal_D"] = r.scal_D.str();
    auto lc = nlohmann::json::array();
    for (const auto& l : r.lambda_candidates) lc.push_back(l.str());
    j["lambda_candidates"] = lc;
    j["div_S"] = covector_text(r.div_S);
    j["notes"] = r.notes;
    return j;
}

}  // namespace g2forge
