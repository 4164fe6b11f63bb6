#include "g2forge/g2.hpp"

#include <cmath>

#include "g2forge/errors.hpp"

namespace g2forge {

namespace {

constexpr Mask kFull7 = 0x7f;

// Continued-fraction rational approximation of an mpf value.
mpq_class rationalize(const mpf_class& x, const mpf_class& tol) {
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    mpf_class r = x;
    for (int it = 0; it < 200; ++it) {
        mpf_class fl = floor(r);
        mpz_class a(fl);
        mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        mpq_class cand(h1, k1);
        cand.canonicalize();
        mpf_class diff = mpf_class(cand, x.get_prec()) - x;
        if (abs(diff) < tol) return cand;
        mpf_class frac = r - fl;
        if (frac == 0) return cand;
        r = 1 / frac;
    }
    mpq_class out(h1, k1);
    out.canonicalize();
    return out;
}

mpf_class real_root(const mpf_class& y, unsigned k, mp_bitcnt_t prec) {
    if (y == 0) return mpf_class(0, prec);
    bool neg = y < 0;
    mpf_class a(abs(y), prec);
    double guess = std::pow(a.get_d(), 1.0 / k);
    mpf_class r(guess, prec);
    for (int it = 0; it < 60; ++it) {
        mpf_class rk1(1, prec);
        for (unsigned i = 0; i + 1 < k; ++i) rk1 *= r;
        r = ((k - 1) * r + a / rk1) / k;
    }
    return neg ? mpf_class(-r) : r;
}

}  // namespace

std::optional<QuadScalar> field_root(const QuadScalar& x, unsigned k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return x;
    if (x.is_zero()) return QuadScalar();
    if (k % 2 == 0) {
        auto s = sqrt_if_exact(x);
        if (!s) return std::nullopt;
        return field_root(*s, k / 2);
    }
    if (x.is_rational()) {
        if (auto r = rational_root(x.q1(), k)) return QuadScalar(*r);
        return std::nullopt;
    }
    const mp_bitcnt_t prec = 512;
    mpf_class s2 = sqrt(mpf_class(2, prec)), s3 = sqrt(mpf_class(3, prec)), s6 = sqrt(mpf_class(6, prec));
    mpf_class acc[4] = {mpf_class(0, prec), mpf_class(0, prec), mpf_class(0, prec), mpf_class(0, prec)};
    for (int a : {1, -1})
        for (int b : {1, -1}) {
            mpf_class y(x.q1(), prec);
            y += mpf_class(x.q2(), prec) * s2 * a;
            y += mpf_class(x.q3(), prec) * s3 * b;
            y += mpf_class(x.q6(), prec) * s6 * (a * b);
            mpf_class r = real_root(y, k, prec);
            acc[0] += r;
            acc[1] += r * a;
            acc[2] += r * b;
            acc[3] += r * (a * b);
        }
    mpf_class tol(1, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), 200);
    QuadScalar cand(rationalize(acc[0] / 4, tol), rationalize(acc[1] / (4 * s2), tol),
                    rationalize(acc[2] / (4 * s3), tol), rationalize(acc[3] / (4 * s6), tol));
    QuadScalar p = 1;
    for (unsigned i = 0; i < k; ++i) p *= cand;
    if (p == x) return cand;
    return std::nullopt;
}

Matrix pairing_matrix(const KForm& phi) {
    if (phi.dim() != 7 || phi.degree() != 3) throw Error(ErrorKind::DimensionMismatch, "expected a 3-form in dimension 7");
    std::vector<KForm> iphi;
    for (int i = 0; i < 7; ++i) iphi.push_back(contract(unit_vector(7, i), phi));
    Matrix B(7, 7);
    QuadScalar sixth = QuadScalar::rational(1, 6);
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            QuadScalar v = wedge(wedge(iphi[i], iphi[j]), phi).coeff(kFull7) * sixth;
            B(i, j) = v;
            B(j, i) = v;
        }
    return B;
}

PositivityResult check_positive(const KForm& phi, int orientation) {
    if (orientation != 1 && orientation != -1) throw Error(ErrorKind::InvalidArgument, "orientation must be +1 or -1");
    PositivityResult r;
    r.B = pairing_matrix(phi) * QuadScalar(orientation);
    auto minors = leading_minors(r.B);
    for (std::size_t k = 0; k < minors.size(); ++k)
        if (sign(minors[k]) <= 0) {
            r.failing_minor = static_cast<int>(k + 1);
            r.minor_value = minors[k];
            return r;
        }
    r.positive = true;
    return r;
}

KForm G2Structure::to_input_coframe(const KForm& a) const {
    QuadScalar f = 1;
    for (int i = 0; i < a.degree(); ++i) f *= frame_scale;
    return a * f;
}

G2Structure build(const LieAlgebraData& alg, const KForm& phi, int orientation) {
    if (alg.dim() != 7) throw Error(ErrorKind::DimensionMismatch, "G2 structures live on 7-dimensional algebras");
    if (phi.dim() != 7 || phi.degree() != 3) throw Error(ErrorKind::DimensionMismatch, "phi must be a 3-form in dimension 7");
    auto pos = check_positive(phi, orientation);
    if (!pos.positive)
        throw Error(ErrorKind::NotPositive, "leading principal minor " + std::to_string(pos.failing_minor) +
                                                " of the pairing matrix is " + pos.minor_value.str());
    QuadScalar lambda = pos.B(0, 0);
    if (pos.B != Matrix::identity(7) * lambda)
        throw Error(ErrorKind::MetricNotRepresentable, "pairing matrix is positive definite but not a multiple of the identity");
    auto nu = field_root(lambda, 9);
    if (!nu) throw Error(ErrorKind::MetricNotRepresentable, "ninth root of " + lambda.str() + " is not in the field");

    G2Structure g;
    g.alg = alg;
    g.phi = phi;
    g.B = pos.B;
    g.frame_scale = *nu;
    g.orientation = orientation;
    g.metric = Matrix::identity(7) * (*nu * *nu);
    QuadScalar nu7 = 1;
    for (int i = 0; i < 7; ++i) nu7 *= *nu;
    g.vol = KForm(7, 7);
    g.vol.add_term(kFull7, nu7 * QuadScalar(orientation));
    if (*nu == QuadScalar(1)) {
        g.frame_alg = alg;
        g.frame_phi = phi;
    } else {
        QuadScalar inv = inverse(*nu);
        g.frame_alg = alg.scaled(inv);
        g.frame_phi = phi * (inv * inv * inv);
    }
    g.frame_alg.set_gram(Matrix::identity(7));
    g.closed = ce_differential(g.alg, phi).is_zero();
    return g;
}

Matrix two_form_matrix(const KForm& beta) {
    int n = beta.dim();
    Matrix T(n, n);
    for (const auto& [m, c] : beta.terms()) {
        auto idx = mask_indices(m);
        T(idx[1], idx[0]) = c;
        T(idx[0], idx[1]) = -c;
    }
    return T;
}

KForm matrix_two_form(const Matrix& T) {
    int n = static_cast<int>(T.rows());
    KForm f(n, 2);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) f.add_term(static_cast<Mask>((1u << a) | (1u << b)), T(b, a));
    return f;
}

TorsionData torsion(const G2Structure& g2) {
    if (!g2.closed) throw Error(ErrorKind::NotClosed, "torsion is only defined here for closed structures (d phi != 0)");
    const auto& alg = g2.frame_alg;
    const auto& phi = g2.frame_phi;
    TorsionData t;
    Matrix id = Matrix::identity(7);
    KForm star_phi = hodge_star(phi, id, g2.orientation);
    t.tau = -hodge_star(ce_differential(alg, star_phi), id, g2.orientation);
    t.tau_matrix = two_form_matrix(t.tau);
    t.tau_sq = t.tau_matrix * t.tau_matrix;
    t.norm_sq = form_inner(t.tau, t.tau);
    t.laplacian = ce_differential(alg, t.tau);
    auto conn = levi_civita(alg);
    t.ric = ricci(alg, conn);
    t.scal = t.ric.trace();
    t.Q = t.ric - Matrix::identity(7) * (t.tau_sq.trace() * QuadScalar::rational(1, 12)) +
          t.tau_sq * QuadScalar::rational(1, 2);
    return t;
}

bool check_theta_identity(const G2Structure& g2, const TorsionData& t) {
    return theta_action(t.Q, g2.frame_phi) == t.laplacian;
}

bool check_theta_identity(const G2Structure& g2) { return check_theta_identity(g2, torsion(g2)); }

std::vector<Matrix> derivation_space(const LieAlgebraData& alg) {
    int n = alg.dim();
    // unknown D(a,b) at column a*n + b; constraint rows per (i<j, k)
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec row(static_cast<std::size_t>(n) * n);
                // D[e_i,e_j] component k: sum_m c_ij^m D(k,m)
                for (int m = 0; m < n; ++m)
                    if (!alg.c(i, j, m).is_zero()) row[k * n + m] += alg.c(i, j, m);
                // - [D e_i, e_j]_k - [e_i, D e_j]_k
                for (int m = 0; m < n; ++m) {
                    if (!alg.c(m, j, k).is_zero()) row[m * n + i] -= alg.c(m, j, k);
                    if (!alg.c(i, m, k).is_zero()) row[m * n + j] -= alg.c(i, m, k);
                }
                if (!is_zero(row)) rows.push_back(std::move(row));
            }
    std::vector<Matrix> basis;
    std::vector<Vec> ker;
    if (rows.empty()) {
        for (int a = 0; a < n * n; ++a) ker.push_back(unit_vector(static_cast<std::size_t>(n) * n, a));
    } else {
        ker = kernel(Matrix::from_rows(rows));
    }
    for (const auto& v : ker) {
        Matrix D(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) D(a, b) = v[a * n + b];
        basis.push_back(D);
    }
    return basis;
}

bool is_derivation(const LieAlgebraData& alg, const Matrix& D) {
    int n = alg.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec lhs = D * alg.bracket_basis(i, j);
            Vec r1 = alg.bracket(D.column(i), unit_vector(n, j));
            Vec r2 = alg.bracket(unit_vector(n, i), D.column(j));
            for (int k = 0; k < n; ++k)
                if (lhs[k] != r1[k] + r2[k]) return false;
        }
    return true;
}

std::optional<SemiAlgebraicSoliton> find_semialgebraic_soliton(const G2Structure& g2, const TorsionData& t) {
    const auto& phi = g2.frame_phi;
    auto der = derivation_space(g2.frame_alg);
    std::size_t d = der.size();
    auto masks = masks_of_degree(7, 3);
    Matrix M(masks.size(), d + 1);
    Vec rhs = form_coordinates(t.laplacian);
    Vec phic = form_coordinates(phi);
    for (std::size_t r = 0; r < masks.size(); ++r) M(r, 0) = phic[r];
    for (std::size_t s = 0; s < d; ++s) {
        Vec col = form_coordinates(theta_action(der[s], phi));
        for (std::size_t r = 0; r < masks.size(); ++r) M(r, s + 1) = col[r];
    }
    auto sol = solve(M, rhs);
    if (!sol) return std::nullopt;

    // Minimise |sum t_s D_s|^2 over the affine set: normal equations in the nullspace coordinates.
    Matrix G(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            QuadScalar v = (der[a].transpose() * der[b]).trace();
            G(a, b) = v;
            G(b, a) = v;
        }
    std::size_t k = sol->nullspace.size();
    Vec x = sol->particular;
    if (k > 0 && d > 0) {
        Matrix N(d, k);
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t r = 0; r < d; ++r) N(r, c) = sol->nullspace[c][r + 1];
        Vec t0(d);
        for (std::size_t r = 0; r < d; ++r) t0[r] = x[r + 1];
        Matrix NtG = N.transpose() * G;
        Matrix lhs = NtG * N;
        Vec b = scaled(QuadScalar(-1), NtG * t0);
        auto y = solve(lhs, b);
        if (y) {
            for (std::size_t c = 0; c < k; ++c)
                if (!y->particular[c].is_zero()) x = axpy(y->particular[c], sol->nullspace[c], x);
        }
    }
    SemiAlgebraicSoliton out;
    out.lambda = x[0];
    out.D = Matrix(7, 7);
    for (std::size_t s = 0; s < d; ++s)
        if (!x[s + 1].is_zero()) out.D += der[s] * x[s + 1];
    out.solution_dim = k;
    return out;
}

std::optional<SemiAlgebraicSoliton> find_semialgebraic_soliton(const G2Structure& g2) {
    return find_semialgebraic_soliton(g2, torsion(g2));
}

const G2Structure& ScaledStructure::require_concrete() const {
    if (!structure)
        throw Error(ErrorKind::ScaleNotRepresentable,
                    "c^(1/3) for c = " + c.str() + " is not in the field; only scale-invariant queries are available");
    return *structure;
}

ScaledStructure scaling_transport(const G2Structure& g2, const QuadScalar& c) {
    if (c.is_zero()) throw Error(ErrorKind::InvalidArgument, "scale factor must be nonzero");
    if (sign(c) < 0) throw Error(ErrorKind::InvalidArgument, "negative scale reverses orientation");
    ScaledStructure s;
    s.c = c;
    s.cube_root = field_root(c, 3);
    if (s.cube_root) {
        s.metric_scale = *s.cube_root * *s.cube_root;
        s.laplacian_scale = *s.cube_root;
        s.structure = build(g2.alg, g2.phi * c, g2.orientation);
    }
    return s;
}

bool equivalence_check(const LinearMap& h, const G2Structure& a, const G2Structure& b) {
    if (!inverse(h)) throw Error(ErrorKind::NotAnIsomorphism, "map is singular");
    if (!is_bracket_homomorphism(h, a.alg, b.alg))
        throw Error(ErrorKind::NotAnIsomorphism, "map does not intertwine the brackets");
    return pullback_action(h, a.phi) == b.phi;
}

}  // namespace g2forge
