#include <doctest.h>

#include "g2forge/errors.hpp"
#include "g2forge/forms.hpp"
#include "support.hpp"

using namespace g2forge;

namespace {

Matrix random_invertible(oracle::Rng& rng, int n, double density = 0.5) {
    for (;;) {
        Matrix h = rng.matrix(n, density, 0.2) + Matrix::identity(n);
        if (inverse(h)) return h;
    }
}

}  // namespace

TEST_CASE("wedge agrees with the shuffle oracle") {
    oracle::Rng rng(21);
    for (int it = 0; it < 80; ++it) {
        int n = static_cast<int>(rng.integer(4, 7));
        int k = static_cast<int>(rng.integer(0, 3)), l = static_cast<int>(rng.integer(1, 3));
        if (k + l > n) continue;
        auto a = rng.form(n, k, 0.4), b = rng.form(n, l, 0.4);
        CHECK(wedge(a, b) == oracle::wedge(a, b));
    }
}

TEST_CASE("graded commutativity and associativity") {
    oracle::Rng rng(22);
    for (int it = 0; it < 60; ++it) {
        int k = static_cast<int>(rng.integer(1, 3)), l = static_cast<int>(rng.integer(1, 3)),
            m = static_cast<int>(rng.integer(1, 2));
        auto a = rng.form(7, k), b = rng.form(7, l), c = rng.form(7, m);
        QuadScalar s = (k * l) % 2 ? QuadScalar(-1) : QuadScalar(1);
        CHECK(wedge(a, b) == s * wedge(b, a));
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("Hodge star: basis values and the defining pairing") {
    CHECK(hodge_star(KForm::basis(7, {1, 2, 7})) == KForm::basis(7, {3, 4, 5, 6}));
    CHECK(hodge_star(KForm::basis(7, {1, 2, 7}), Matrix::identity(7), -1) == -KForm::basis(7, {3, 4, 5, 6}));
    KForm vol = KForm::basis(7, {1, 2, 3, 4, 5, 6, 7});
    oracle::Rng rng(23);
    for (int k = 0; k <= 7; ++k) {
        auto b = rng.form(7, k, 0.5);
        for (Mask m : masks_of_degree(7, k)) {
            KForm a(7, k);
            a.add_term(m, 1);
            CHECK(wedge(a, hodge_star(b)) == vol * form_inner(a, b));
        }
    }
}

TEST_CASE("double Hodge star signs") {
    oracle::Rng rng(24);
    for (int n : {4, 5, 6, 7})
        for (int k = 0; k <= n; ++k)
            for (int it = 0; it < 4; ++it) {
                auto a = rng.form(n, k, 0.5);
                QuadScalar s = (k * (n - k)) % 2 ? QuadScalar(-1) : QuadScalar(1);
                CHECK(hodge_star(hodge_star(a)) == s * a);
                CHECK(hodge_star(hodge_star(a, Matrix::identity(n), -1), Matrix::identity(n), -1) == s * a);
            }
}

TEST_CASE("contraction agrees with slot insertion") {
    oracle::Rng rng(25);
    for (int it = 0; it < 40; ++it) {
        int k = static_cast<int>(rng.integer(1, 4));
        auto a = rng.form(7, k, 0.5);
        Vec x(7);
        for (auto& c : x) c = rng.scalar(0.2);
        KForm got = contract(x, a);
        KForm want = oracle::from_values(7, k - 1, [&](const std::vector<Vec>& v) {
            std::vector<Vec> w{x};
            w.insert(w.end(), v.begin(), v.end());
            return oracle::eval(a, w);
        });
        CHECK(got == want);
    }
}

TEST_CASE("theta action agrees with the slotwise oracle and is a derivation") {
    oracle::Rng rng(26);
    for (int it = 0; it < 40; ++it) {
        Matrix A = rng.matrix(7, 0.3), B = rng.matrix(7, 0.3);
        int k = static_cast<int>(rng.integer(1, 3)), l = static_cast<int>(rng.integer(1, 3));
        auto a = rng.form(7, k, 0.4), b = rng.form(7, l, 0.4);
        CHECK(theta_action(A, a) == oracle::theta(A, a));
        CHECK(theta_action(A, wedge(a, b)) == wedge(theta_action(A, a), b) + wedge(a, theta_action(A, b)));
        CHECK(theta_action(commutator(A, B), a) ==
              theta_action(A, theta_action(B, a)) - theta_action(B, theta_action(A, a)));
    }
}

TEST_CASE("pullback action agrees with the oracle and is a left action") {
    oracle::Rng rng(27);
    for (int it = 0; it < 20; ++it) {
        Matrix h = random_invertible(rng, 7, 0.2), g = random_invertible(rng, 7, 0.2);
        Matrix hinv = *inverse(h);
        auto a = rng.form(7, 3, 0.3);
        KForm want = oracle::from_values(7, 3, [&](const std::vector<Vec>& v) {
            std::vector<Vec> w;
            for (const auto& x : v) w.push_back(hinv * x);
            return oracle::eval(a, w);
        });
        CHECK(pullback_action(h, a) == want);
        CHECK(pullback_action(h * g, a) == pullback_action(h, pullback_action(g, a)));
    }
}

TEST_CASE("form parsing and rendering") {
    KForm f = parse_form("e127 + e347 - r2/2*e135 + 3*e246", 7);
    CHECK(f.coeff({1, 2, 7}) == QuadScalar(1));
    CHECK(f.coeff({1, 3, 5}) == -QuadScalar::sqrt2() * QuadScalar::rational(1, 2));
    CHECK(parse_form(f.str(), 7) == f);
    CHECK(parse_form("e21", 7) == -KForm::basis(7, {1, 2}));
    CHECK_THROWS_AS(parse_form("e11", 7), ParseError);
    CHECK_THROWS_AS(parse_form("e12 + e3", 7), ParseError);
    CHECK_THROWS_AS(parse_form("e18", 7), ParseError);
    oracle::Rng rng(28);
    for (int it = 0; it < 50; ++it) {
        auto a = rng.form(7, static_cast<int>(rng.integer(1, 4)), 0.3, 0.5);
        if (a.is_zero()) continue;
        CHECK(parse_form(a.str(), 7) == a);
    }
}
