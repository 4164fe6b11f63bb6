#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

namespace g2forge {

// Element q1 + q2*sqrt2 + q3*sqrt3 + q6*sqrt6 of Q(sqrt2, sqrt3).
class QuadScalar {
public:
    QuadScalar() : q_{0, 0, 0, 0} {}
    QuadScalar(long v) : q_{v, 0, 0, 0} {}  // NOLINT: implicit from integers is intended
    QuadScalar(const mpq_class& r) : q_{r, 0, 0, 0} { q_[0].canonicalize(); }  // NOLINT
    QuadScalar(mpq_class q1, mpq_class q2, mpq_class q3, mpq_class q6);

    static QuadScalar rational(long num, long den = 1);
    static QuadScalar sqrt2() { return {0, 1, 0, 0}; }
    static QuadScalar sqrt3() { return {0, 0, 1, 0}; }
    static QuadScalar sqrt6() { return {0, 0, 0, 1}; }

    const mpq_class& q1() const { return q_[0]; }
    const mpq_class& q2() const { return q_[1]; }
    const mpq_class& q3() const { return q_[2]; }
    const mpq_class& q6() const { return q_[3]; }
    const mpq_class& component(int i) const { return q_[i]; }

    bool is_zero() const;
    bool is_rational() const { return q_[1] == 0 && q_[2] == 0 && q_[3] == 0; }

    QuadScalar operator-() const;
    QuadScalar& operator+=(const QuadScalar& o);
    QuadScalar& operator-=(const QuadScalar& o);
    QuadScalar& operator*=(const QuadScalar& o);
    QuadScalar& operator/=(const QuadScalar& o);

    friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
    friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
    friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
    friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }
    friend bool operator==(const QuadScalar& a, const QuadScalar& b);
    friend bool operator!=(const QuadScalar& a, const QuadScalar& b) { return !(a == b); }

    // Galois conjugates: flip sqrt2 (s2), flip sqrt3 (s3).
    QuadScalar conjugate(bool s2, bool s3) const;

    std::string str() const;

private:
    mpq_class q_[4];
};

QuadScalar add(const QuadScalar& a, const QuadScalar& b);
QuadScalar mul(const QuadScalar& a, const QuadScalar& b);
QuadScalar inverse(const QuadScalar& a);
int sign(const QuadScalar& a);

// b with b*b == a when b lies in the field. Throws NegativeInput when a < 0.
std::optional<QuadScalar> sqrt_if_exact(const QuadScalar& a);

// Exact k-th root of a rational, if any (k >= 1).
std::optional<mpq_class> rational_root(const mpq_class& a, unsigned k);

// Rational enclosure [lo, hi] of the real value, refined to 2^-bits.
std::pair<mpq_class, mpq_class> enclose(const QuadScalar& a, unsigned long bits);

// Double approximation, for diagnostics only.
double approx(const QuadScalar& a);

QuadScalar parse_scalar(const std::string& text);

inline int compare(const QuadScalar& a, const QuadScalar& b) { return sign(a - b); }

}  // namespace g2forge
