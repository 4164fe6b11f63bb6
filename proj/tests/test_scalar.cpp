#include <doctest.h>

#include "g2forge/errors.hpp"
#include "g2forge/g2.hpp"
#include "g2forge/scalar.hpp"
#include "support.hpp"

using namespace g2forge;

namespace {

// Independent product on coordinates over (1, r2, r3, r6).
QuadScalar oracle_mul(const QuadScalar& a, const QuadScalar& b) {
    const mpq_class &a1 = a.q1(), &a2 = a.q2(), &a3 = a.q3(), &a6 = a.q6();
    const mpq_class &b1 = b.q1(), &b2 = b.q2(), &b3 = b.q3(), &b6 = b.q6();
    mpq_class c1 = a1 * b1 + 2 * a2 * b2 + 3 * a3 * b3 + 6 * a6 * b6;
    mpq_class c2 = a1 * b2 + a2 * b1 + 3 * (a3 * b6 + a6 * b3);
    mpq_class c3 = a1 * b3 + a3 * b1 + 2 * (a2 * b6 + a6 * b2);
    mpq_class c6 = a1 * b6 + a6 * b1 + a2 * b3 + a3 * b2;
    return QuadScalar(c1, c2, c3, c6);
}

mpf_class high(const QuadScalar& a) {
    const unsigned long prec = 1024;
    mpf_class r2(2, prec), r3(3, prec), r6(6, prec);
    r2 = sqrt(r2);
    r3 = sqrt(r3);
    r6 = sqrt(r6);
    mpf_class v(a.q1(), prec);
    v += mpf_class(a.q2(), prec) * r2;
    v += mpf_class(a.q3(), prec) * r3;
    v += mpf_class(a.q6(), prec) * r6;
    return v;
}

}  // namespace

TEST_CASE("field arithmetic against a coordinate oracle on random triples") {
    oracle::Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        auto a = rng.scalar(0.7), b = rng.scalar(0.7), c = rng.scalar(0.7);
        CHECK(a * b == oracle_mul(a, b));
        CHECK(mul(a, b) == oracle_mul(a, b));
        CHECK(add(a, b) == QuadScalar(a.q1() + b.q1(), a.q2() + b.q2(), a.q3() + b.q3(), a.q6() + b.q6()));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QuadScalar());
        if (!b.is_zero()) {
            CHECK(oracle_mul(inverse(b), b) == QuadScalar(1));
            CHECK(oracle_mul(a / b, b) == a);
        }
    }
}

TEST_CASE("Galois conjugation is a field automorphism") {
    oracle::Rng rng(12);
    for (int it = 0; it < 100; ++it) {
        auto a = rng.scalar(0.8), b = rng.scalar(0.8);
        for (bool s2 : {false, true})
            for (bool s3 : {false, true}) {
                CHECK((a * b).conjugate(s2, s3) == a.conjugate(s2, s3) * b.conjugate(s2, s3));
                CHECK((a + b).conjugate(s2, s3) == a.conjugate(s2, s3) + b.conjugate(s2, s3));
            }
        CHECK(QuadScalar::sqrt6().conjugate(true, false) == -QuadScalar::sqrt6());
    }
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(inverse(QuadScalar()), Error);
    try {
        (void)(QuadScalar(1) / QuadScalar());
        FAIL("expected DivisionByZero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("sign agrees with a high-precision evaluation") {
    oracle::Rng rng(13);
    for (int it = 0; it < 300; ++it) {
        auto a = rng.scalar(0.8);
        mpf_class v = high(a);
        int want = a.is_zero() ? 0 : (v > 0 ? 1 : -1);
        CHECK(sign(a) == want);
    }
}

TEST_CASE("sign on near-cancelling convergents of sqrt2 and sqrt6") {
    // p/q - sqrt2 has the sign of p^2 - 2 q^2, decided on integers.
    mpz_class p = 1, q = 1;
    for (int k = 0; k < 40; ++k) {
        QuadScalar x = QuadScalar(mpq_class(p, q)) - QuadScalar::sqrt2();
        int want = sgn(mpz_class(p * p - 2 * q * q));
        CHECK(sign(x) == want);
        mpz_class np = p + 2 * q, nq = p + q;
        p = np;
        q = nq;
    }
    // r2 + r3 - r6 - 9/10 versus mpf (value about -0.0032)
    QuadScalar y = QuadScalar::sqrt2() + QuadScalar::sqrt3() - QuadScalar::sqrt6() - QuadScalar::rational(9, 10);
    CHECK(sign(y) == (high(y) > 0 ? 1 : -1));
}

TEST_CASE("enclosure brackets the value") {
    oracle::Rng rng(14);
    for (int it = 0; it < 50; ++it) {
        auto a = rng.scalar(0.8);
        auto [lo, hi] = enclose(a, 120);
        mpf_class v = high(a);
        CHECK(mpf_class(lo, 1024) <= v);
        CHECK(v <= mpf_class(hi, 1024));
        CHECK(hi - lo <= mpq_class(1, mpz_class(1) << 120));
    }
}

TEST_CASE("sqrt_if_exact") {
    oracle::Rng rng(15);
    for (int it = 0; it < 100; ++it) {
        auto b = rng.scalar(0.6);
        auto r = sqrt_if_exact(b * b);
        REQUIRE(r.has_value());
        CHECK(oracle_mul(*r, *r) == b * b);
        CHECK(sign(*r) >= 0);
    }
    CHECK(*sqrt_if_exact(QuadScalar(2)) == QuadScalar::sqrt2());
    CHECK(*sqrt_if_exact(QuadScalar::rational(3, 2)) == QuadScalar::sqrt6() * QuadScalar::rational(1, 2));
    CHECK(*sqrt_if_exact(QuadScalar(5) + QuadScalar(2) * QuadScalar::sqrt6()) ==
          QuadScalar::sqrt2() + QuadScalar::sqrt3());
    CHECK_FALSE(sqrt_if_exact(QuadScalar(1) + QuadScalar::sqrt2()).has_value());
    CHECK_FALSE(sqrt_if_exact(QuadScalar(5)).has_value());
    try {
        (void)sqrt_if_exact(QuadScalar(-4));
        FAIL("expected NegativeInput");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NegativeInput);
    }
}

TEST_CASE("rational_root") {
    CHECK(*rational_root(mpq_class(8, 27), 3) == mpq_class(2, 3));
    CHECK(*rational_root(mpq_class(-8), 3) == mpq_class(-2));
    CHECK_FALSE(rational_root(mpq_class(2), 3).has_value());
    CHECK(*rational_root(mpq_class(512), 9) == mpq_class(2));
}

TEST_CASE("field_root recovers odd roots") {
    CHECK(*field_root(QuadScalar(8), 3) == QuadScalar(2));
    QuadScalar u = QuadScalar(1) + QuadScalar::sqrt2();
    CHECK(*field_root(u * u * u, 3) == u);
    QuadScalar w = QuadScalar::rational(1, 2) + QuadScalar::sqrt3() * QuadScalar::rational(1, 3);
    QuadScalar w9 = 1;
    for (int i = 0; i < 9; ++i) w9 *= w;
    CHECK(*field_root(w9, 9) == w);
    CHECK_FALSE(field_root(QuadScalar(2), 3).has_value());
    CHECK_FALSE(field_root(QuadScalar(1) + QuadScalar::sqrt2(), 3).has_value());
}

TEST_CASE("canonical rendering and parse round trip") {
    CHECK((QuadScalar::rational(1, 2) + QuadScalar::sqrt6()).str() == "1/2 + r6");
    CHECK(QuadScalar().str() == "0");
    CHECK((-QuadScalar::sqrt2() * QuadScalar::rational(1, 12)).str() == parse_scalar("-r2/12").str());
    CHECK(parse_scalar("3*r3") == QuadScalar(3) * QuadScalar::sqrt3());
    CHECK(parse_scalar("sqrt(6)/2") == QuadScalar::sqrt6() * QuadScalar::rational(1, 2));
    oracle::Rng rng(16);
    for (int it = 0; it < 200; ++it) {
        auto a = rng.scalar(0.7);
        CHECK(parse_scalar(a.str()) == a);
    }
    CHECK_THROWS_AS(parse_scalar("1 + r5"), ParseError);
}
