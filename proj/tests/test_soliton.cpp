#include <doctest.h>

#include "g2forge/catalog.hpp"
#include "g2forge/errors.hpp"
#include "g2forge/soliton.hpp"
#include "support.hpp"

using namespace g2forge;

namespace {

G2Structure structure(const std::string& name) {
    auto e = *find_entry(catalog_dir(), name);
    return build(e.alg, e.phi, e.orientation);
}

SolitonReport classify_with_own_lambda(const G2Structure& g) {
    auto t = torsion(g);
    auto s = find_semialgebraic_soliton(g, t);
    return classify(g, t, s ? std::optional<QuadScalar>(s->lambda) : std::nullopt);
}

}  // namespace

TEST_CASE("key lemma residual on n5") {
    auto g = structure("n5");
    Vec v = unit_vector(7, 1);
    v[1] = -1;
    CHECK(is_zero(key_lemma_residual(g, v)));
    CHECK_FALSE(is_zero(key_lemma_residual(g, unit_vector(7, 0))));
    // residual is <ric v, .> + 1/2 Div tau^2, checked against oracles
    auto t = torsion(g);
    Vec div = oracle::divergence(g.frame_alg, t.tau_sq);
    Vec x = unit_vector(7, 0);
    Vec want = axpy(QuadScalar::rational(1, 2), div, oracle::ricci(g.frame_alg) * x);
    CHECK(key_lemma_residual(g, x) == want);
}

TEST_CASE("Gaussian product constant") {
    CHECK(gaussian_product_lambda(1, QuadScalar(-3)) == QuadScalar::rational(3, 2));
    CHECK(gaussian_product_lambda(0, QuadScalar(-7)) == QuadScalar(2));
    for (int k = 0; k <= 6; ++k) {
        QuadScalar scal = QuadScalar::rational(-5, 2);
        QuadScalar want = -(QuadScalar(2 + k) / QuadScalar(7 - k)) * scal;
        CHECK(gaussian_product_lambda(k, scal) == want);
    }
    CHECK_THROWS_AS(gaussian_product_lambda(7, QuadScalar(-1)), Error);
    CHECK_THROWS_AS(gaussian_product_lambda(-1, QuadScalar(-1)), Error);
}

TEST_CASE("product consistency checker") {
    oracle::Rng rng(61);
    for (int it = 0; it < 20; ++it) {
        int m = static_cast<int>(rng.integer(2, 6));
        Matrix r = rng.matrix(m, 0.5, 0.2);
        r = r + r.transpose();
        QuadScalar c = rng.scalar(0.2);
        Matrix block = product_gaussian_tau_block(r, c);
        // oracle: -2 ric_N + 2c on the first m coordinates, zero elsewhere
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                QuadScalar want = (i < m && j < m) ? QuadScalar(-2) * r(i, j) + (i == j ? QuadScalar(2) * c : QuadScalar()) : QuadScalar();
                CHECK(block(i, j) == want);
            }
        Matrix ric(7, 7);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) ric(i, j) = r(i, j);
        std::vector<int> flat;
        for (int i = m; i < 7; ++i) flat.push_back(i);
        if (block == Matrix::identity(7) * block(0, 0) && !block.is_zero()) continue;
        auto ok = check_product_gaussian(block, ric, flat);
        CHECK(ok.consistent);
        CHECK(*ok.c == c);
        Matrix bad = block;
        bad(m, m) = 1;
        auto no = check_product_gaussian(bad, ric, flat);
        CHECK_FALSE(no.consistent);
        CHECK_FALSE(no.reason.empty());
    }
    auto iso = check_product_gaussian(Matrix::identity(7) * QuadScalar(-1), Matrix(7, 7), {});
    CHECK_FALSE(iso.consistent);
}

TEST_CASE("classification outcomes and witnesses on the catalog") {
    struct Want {
        const char* name;
        Outcome outcome;
    };
    for (auto w : {Want{"n1", Outcome::GaussianOnly}, Want{"n2", Outcome::EliminatedProductObstruction},
                   Want{"n3", Outcome::EliminatedProductObstruction}, Want{"n4", Outcome::EliminatedTrivialKernel},
                   Want{"n5", Outcome::EliminatedExtensionContradiction}, Want{"n6", Outcome::EliminatedTrivialKernel},
                   Want{"n7", Outcome::EliminatedExtensionContradiction},
                   Want{"n12", Outcome::EliminatedProductObstruction}, Want{"K7", Outcome::EliminatedProductObstruction}}) {
        CAPTURE(w.name);
        auto r = classify_with_own_lambda(structure(w.name));
        CHECK(r.outcome == w.outcome);
        CHECK(exit_code(r) == 0);
        if (r.product) {
            // witnesses are orthogonal to ker ric and carry distinct Rayleigh quotients of Q
            auto g = structure(w.name);
            auto t = torsion(g);
            for (const auto* x : {&r.product->u, &r.product->w}) {
                for (const auto& k : r.ker_ric) CHECK(dot(*x, k).is_zero());
                CHECK(is_zero(oracle::ricci(g.frame_alg) * *x) == false);
            }
            CHECK(r.product->qu == dot(t.Q * r.product->u, r.product->u) / dot(r.product->u, r.product->u));
            CHECK(r.product->qw == dot(t.Q * r.product->w, r.product->w) / dot(r.product->w, r.product->w));
            CHECK(r.product->qu != r.product->qw);
        }
        if (r.extension && r.extension->parallel) {
            CHECK(*r.extension->lhs != *r.extension->rhs);
        }
    }
}

TEST_CASE("n1 Gaussian coefficient is -lambda/6") {
    auto g = structure("n1");
    for (long l : {0L, 3L, -6L}) {
        auto r = classify(g, QuadScalar(l));
        CHECK(r.outcome == Outcome::GaussianOnly);
        CHECK(*r.gaussian_coefficient == QuadScalar(-l) * QuadScalar::rational(1, 6));
    }
}

TEST_CASE("n5 extension witness") {
    auto r = classify_with_own_lambda(structure("n5"));
    REQUIRE(r.extension);
    Vec v(7);
    v[1] = -1;
    CHECK(r.extension->v == v);
    CHECK(r.extension->parallel);
    CHECK(*r.extension->lhs == QuadScalar(-2));
    CHECK(*r.extension->rhs == QuadScalar(-4));
    // the required lambda is the only one that would close the chain
    auto r3 = classify(structure("n5"), *r.extension->required_lambda);
    CHECK(*r3.extension->lhs == *r3.extension->rhs);
    CHECK(r3.outcome == Outcome::Inconclusive);
    CHECK(exit_code(r3) == 2);
}

TEST_CASE("classification is invariant under random orthogonal transports") {
    oracle::Rng rng(62);
    auto cat = load_catalog(catalog_dir());
    for (int it = 0; it < 20; ++it) {
        const auto& e = cat[it % cat.size()];
        CAPTURE(e.name);
        Matrix h = oracle::cayley(rng.rational_skew(7, 0.2));
        REQUIRE(h * h.transpose() == Matrix::identity(7));
        auto a = build(e.alg, e.phi, e.orientation);
        auto b = build(transport(h, e.alg), pullback_action(h, e.phi), e.orientation);
        CHECK(equivalence_check(h, a, b));
        auto ta = torsion(a), tb = torsion(b);
        CHECK(ta.scal == tb.scal);
        CHECK(tb.Q == h * ta.Q * h.transpose());
        auto ra = classify_with_own_lambda(a), rb = classify_with_own_lambda(b);
        CHECK(ra.outcome == rb.outcome);
        CHECK(ra.div_case == rb.div_case);
        CHECK(ra.ker_ric.size() == rb.ker_ric.size());
        CHECK(h * ra.div_tau_sq == rb.div_tau_sq);
    }
}
