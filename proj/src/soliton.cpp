#include "g2forge/soliton.hpp"

#include <algorithm>

#include "g2forge/errors.hpp"

namespace g2forge {

const char* to_string(DivergenceCase c) {
    return c == DivergenceCase::DivergenceFree ? "DivergenceFree" : "NonDivergenceFree";
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::EliminatedTrivialKernel: return "EliminatedTrivialKernel";
        case Outcome::EliminatedProductObstruction: return "EliminatedProductObstruction";
        case Outcome::EliminatedExtensionContradiction: return "EliminatedExtensionContradiction";
        case Outcome::GaussianOnly: return "GaussianOnly";
        case Outcome::Inconclusive: return "Inconclusive";
    }
    return "?";
}

int exit_code(const SolitonReport& r) { return r.outcome == Outcome::Inconclusive ? 2 : 0; }

namespace {

QuadScalar rayleigh(const Matrix& Q, const Vec& u) { return dot(Q * u, u) / dot(u, u); }

bool is_parallel(const Vec& r, const Vec& v, QuadScalar& kappa) {
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    kappa = r[p] / v[p];
    for (std::size_t i = 0; i < v.size(); ++i)
        if (r[i] != kappa * v[i]) return false;
    return true;
}

// Orthogonal complement of span(ker), orthogonalised.
std::vector<Vec> complement(const std::vector<Vec>& ker, std::size_t n) {
    if (ker.empty()) {
        std::vector<Vec> all;
        for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(n, i));
        return all;
    }
    return orthogonalize(kernel(Matrix::from_rows(ker)));
}

void product_case(SolitonReport& r, const TorsionData& t) {
    auto W = complement(r.ker_ric, 7);
    const Matrix& Q = t.Q;
    std::vector<QuadScalar> q;
    for (const auto& w : W) q.push_back(rayleigh(Q, w));

    bool diag_equal = std::all_of(q.begin(), q.end(), [&](const QuadScalar& x) { return x == q.front(); });
    if (!W.empty() && !diag_equal) {
        std::size_t j = 0;
        QuadScalar best;
        for (std::size_t b = 1; b < W.size(); ++b) {
            QuadScalar gap = q[b] - q[0];
            if (sign(gap) < 0) gap = -gap;
            int c = compare(gap, best);
            if (c > 0) {
                best = gap;
                j = b;
            } else if (c == 0 && j != 0) {
                QuadScalar ab = q[b], aj = q[j];
                if (sign(ab) < 0) ab = -ab;
                if (sign(aj) < 0) aj = -aj;
                if (compare(ab, aj) >= 0) j = b;
            }
        }
        r.outcome = Outcome::EliminatedProductObstruction;
        r.product = ProductWitness{W[0], W[j], q[0], q[j]};
        r.lambda_free = true;
        return;
    }
    for (std::size_t a = 0; a < W.size(); ++a)
        for (std::size_t b = a + 1; b < W.size(); ++b) {
            QuadScalar m = dot(Q * W[a], W[b]);
            if (m.is_zero()) continue;
            Vec plus = axpy(QuadScalar(1), W[a], W[b]);
            Vec minus = axpy(QuadScalar(-1), W[b], W[a]);
            r.outcome = Outcome::EliminatedProductObstruction;
            r.product = ProductWitness{plus, minus, rayleigh(Q, plus), rayleigh(Q, minus)};
            r.lambda_free = true;
            return;
        }
    // Q is scalar on the complement.
    for (const auto& w : W)
        for (const auto& k : r.ker_ric)
            if (!dot(Q * w, k).is_zero()) {
                r.notes.push_back("Q has a nonzero cross block between ker ric and its complement");
                break;
            }
    bool flat = t.ric.is_zero() && t.tau.is_zero();
    if (flat) {
        r.outcome = Outcome::GaussianOnly;
        if (r.lambda_used) r.gaussian_coefficient = -*r.lambda_used * QuadScalar::rational(1, 6);
        return;
    }
    if (!W.empty() && r.lambda_used) {
        QuadScalar target = -*r.lambda_used * QuadScalar::rational(1, 3);
        if (q.front() != target)
            r.notes.push_back("Q on (ker ric)^perp is " + q.front().str() + " Id, not -lambda/3 = " + target.str());
    }
    r.notes.push_back("Q is scalar on (ker ric)^perp; product obstruction does not apply");
    r.outcome = Outcome::Inconclusive;
}

void extension_case(SolitonReport& r, const TorsionData& t) {
    Vec rhs = scaled(QuadScalar::rational(-1, 2), r.div_tau_sq);
    auto sol = solve(t.ric, rhs);
    if (!sol) throw Error(ErrorKind::SingularMap, "ric v = -1/2 Div tau^2 has no solution with trivial kernel");
    ExtensionWitness w;
    w.v = sol->particular;
    Vec ricv = t.ric * w.v;
    Vec tv = t.tau_sq * w.v;
    w.residual = Vec(7);
    for (int i = 0; i < 7; ++i) w.residual[i] = -ricv[i] - QuadScalar::rational(1, 2) * tv[i];
    QuadScalar kappa;
    w.parallel = is_parallel(w.residual, w.v, kappa);
    if (!w.parallel) {
        r.outcome = Outcome::EliminatedExtensionContradiction;
        r.lambda_free = true;
        r.notes.push_back("-ric v - 1/2 tau^2 v is not parallel to v; contradiction for every lambda");
        r.extension = w;
        return;
    }
    w.kappa = kappa;
    w.lhs = -kappa;
    w.required_lambda = t.scal + QuadScalar(3) * kappa;
    if (!r.lambda_used) {
        r.outcome = Outcome::Inconclusive;
        r.notes.push_back("no lambda available; the extension case requires lambda = " + w.required_lambda->str());
    } else {
        w.rhs = (t.scal - *r.lambda_used) * QuadScalar::rational(1, 3);
        if (*w.lhs != *w.rhs) {
            r.outcome = Outcome::EliminatedExtensionContradiction;
        } else {
            r.outcome = Outcome::Inconclusive;
            r.notes.push_back("lambda equals the value required by the extension case");
        }
    }
    r.extension = w;
}

}  // namespace

Vec key_lemma_residual(const TorsionData& t, const Vec& div_tau_sq, const Vec& v) {
    Vec out = t.ric * v;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += QuadScalar::rational(1, 2) * div_tau_sq[i];
    return out;
}

Vec key_lemma_residual(const G2Structure& g2, const Vec& v) {
    auto t = torsion(g2);
    return key_lemma_residual(t, divergence(g2.frame_alg, t.tau_sq), v);
}

SolitonReport classify(const G2Structure& g2, const TorsionData& t, std::optional<QuadScalar> lambda) {
    SolitonReport r;
    r.div_tau_sq = divergence(g2.frame_alg, t.tau_sq);
    r.div_case = is_zero(r.div_tau_sq) ? DivergenceCase::DivergenceFree : DivergenceCase::NonDivergenceFree;
    r.ker_ric = kernel(t.ric);
    if (lambda) {
        r.lambda_used = lambda;
    } else if (auto s = find_semialgebraic_soliton(g2, t)) {
        r.lambda_used = s->lambda;
    }
    bool trivial_kernel = r.ker_ric.empty();
    if (r.div_case == DivergenceCase::DivergenceFree) {
        if (trivial_kernel) {
            r.outcome = Outcome::EliminatedTrivialKernel;
            r.lambda_free = true;
        } else {
            product_case(r, t);
        }
    } else if (trivial_kernel) {
        extension_case(r, t);
    } else {
        r.outcome = Outcome::Inconclusive;
        r.notes.push_back("Div tau^2 != 0 with nontrivial ker ric: product and extension sub-cases not separable");
    }
    return r;
}

SolitonReport classify(const G2Structure& g2, std::optional<QuadScalar> lambda) {
    return classify(g2, torsion(g2), lambda);
}

QuadScalar gaussian_product_lambda(int k, const QuadScalar& scal) {
    if (k < 0 || k > 6) throw Error(ErrorKind::InvalidArgument, "k must lie in 0..6");
    return -(QuadScalar::rational(2 + k, 7 - k) * scal);
}

Matrix product_gaussian_tau_block(const Matrix& ric_N, const QuadScalar& c) {
    std::size_t m = ric_N.rows();
    if (m > 7 || ric_N.cols() != m) throw Error(ErrorKind::DimensionMismatch, "ric_N must be square of size at most 7");
    Matrix out(7, 7);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, j) = QuadScalar(-2) * ric_N(i, j) + (i == j ? QuadScalar(2) * c : QuadScalar());
    return out;
}

ProductConsistency check_product_gaussian(const Matrix& tau_sq, const Matrix& ric, const std::vector<int>& flat) {
    ProductConsistency out;
    int n = static_cast<int>(tau_sq.rows());
    if (!tau_sq.is_zero() && tau_sq == Matrix::identity(n) * tau_sq(0, 0)) {
        out.reason = "tau^2 is a nonzero constant multiple of the metric";
        return out;
    }
    std::vector<int> base;
    for (int i = 0; i < n; ++i)
        if (std::find(flat.begin(), flat.end(), i) == flat.end()) base.push_back(i);
    // reorder so that the N block comes first
    std::vector<int> order = base;
    order.insert(order.end(), flat.begin(), flat.end());
    Matrix ric_N(base.size(), base.size());
    for (std::size_t a = 0; a < base.size(); ++a)
        for (std::size_t b = 0; b < base.size(); ++b) ric_N(a, b) = ric(base[a], base[b]);
    std::optional<QuadScalar> c;
    if (!base.empty()) c = (tau_sq(base[0], base[0]) + QuadScalar(2) * ric_N(0, 0)) * QuadScalar::rational(1, 2);
    Matrix pred = product_gaussian_tau_block(ric_N, c.value_or(QuadScalar()));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (tau_sq(order[a], order[b]) != pred(a, b)) {
                out.reason = "tau^2(e" + std::to_string(order[a] + 1) + ", e" + std::to_string(order[b] + 1) + ") = " +
                             tau_sq(order[a], order[b]).str() + " but the product prediction is " + pred(a, b).str();
                out.c = c;
                return out;
            }
    out.consistent = true;
    out.c = c;
    return out;
}

}  // namespace g2forge
