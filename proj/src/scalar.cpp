#include "g2forge/scalar.hpp"

#include <cmath>

#include "g2forge/errors.hpp"

namespace g2forge {

namespace {

bool rational_sqrt(const mpq_class& x, mpq_class& out) {
    if (sgn(x) < 0) return false;
    const mpz_class& n = x.get_num();
    const mpz_class& d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = mpq_class(rn, rd);
    out.canonicalize();
    return true;
}

// Elements of Q(sqrt2) as pairs (x1, x2) = x1 + x2*sqrt2.
struct F2 {
    mpq_class a, b;
};

F2 f2_mul(const F2& x, const F2& y) { return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a}; }

std::optional<F2> f2_sqrt(const F2& x) {
    mpq_class r;
    if (x.b == 0) {
        if (rational_sqrt(x.a, r)) return F2{r, 0};
        if (rational_sqrt(x.a / 2, r)) return F2{0, r};
        return std::nullopt;
    }
    mpq_class norm = x.a * x.a - 2 * x.b * x.b;
    mpq_class n;
    if (!rational_sqrt(norm, n)) return std::nullopt;
    for (int s : {1, -1}) {
        mpq_class u2 = (x.a + s * n) / 2;
        mpq_class u;
        if (u2 == 0 || !rational_sqrt(u2, u)) continue;
        mpq_class v = x.b / (2 * u);
        F2 cand{u, v};
        F2 sq = f2_mul(cand, cand);
        if (sq.a == x.a && sq.b == x.b) return cand;
    }
    return std::nullopt;
}

F2 f2_div(const F2& x, const F2& y) {
    mpq_class den = y.a * y.a - 2 * y.b * y.b;
    F2 num = f2_mul(x, F2{y.a, -y.b});
    return {num.a / den, num.b / den};
}

// floor(sqrt(n) * 2^bits) / 2^bits and that plus 2^-bits.
std::pair<mpq_class, mpq_class> sqrt_bounds(unsigned long n, unsigned long bits) {
    mpz_class scaled = mpz_class(n) << (2 * bits);
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    mpz_class den = mpz_class(1) << bits;
    mpq_class lo(s, den), hi(s + 1, den);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

void append_term(std::string& out, const mpq_class& c, const char* unit) {
    bool first = out.empty();
    bool neg = sgn(c) < 0;
    mpq_class mag = abs(c);
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (unit == nullptr) {
        out += mag.get_str();
    } else if (mag == 1) {
        out += unit;
    } else {
        out += mag.get_str();
        out += "*";
        out += unit;
    }
}

}  // namespace

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NegativeInput: return "NegativeInput";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::MetricNotRepresentable: return "MetricNotRepresentable";
        case ErrorKind::NonDiagonalMetric: return "NonDiagonalMetric";
        case ErrorKind::SingularMap: return "SingularMap";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::JacobiViolation: return "JacobiViolation";
        case ErrorKind::NonOrthonormalFrame: return "NonOrthonormalFrame";
        case ErrorKind::NotPositive: return "NotPositive";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::NotAnIsomorphism: return "NotAnIsomorphism";
        case ErrorKind::ScaleNotRepresentable: return "ScaleNotRepresentable";
        case ErrorKind::NotADerivation: return "NotADerivation";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

QuadScalar::QuadScalar(mpq_class q1, mpq_class q2, mpq_class q3, mpq_class q6)
    : q_{std::move(q1), std::move(q2), std::move(q3), std::move(q6)} {
    for (auto& q : q_) q.canonicalize();
}

QuadScalar QuadScalar::rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    mpq_class r(num, den);
    r.canonicalize();
    return QuadScalar(r);
}

bool QuadScalar::is_zero() const { return q_[0] == 0 && q_[1] == 0 && q_[2] == 0 && q_[3] == 0; }

QuadScalar QuadScalar::operator-() const {
    QuadScalar r;
    for (int i = 0; i < 4; ++i) r.q_[i] = -q_[i];
    return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
    for (int i = 0; i < 4; ++i) q_[i] += o.q_[i];
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
    for (int i = 0; i < 4; ++i) q_[i] -= o.q_[i];
    return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
    const mpq_class &a1 = q_[0], &a2 = q_[1], &a3 = q_[2], &a6 = q_[3];
    const mpq_class &b1 = o.q_[0], &b2 = o.q_[1], &b3 = o.q_[2], &b6 = o.q_[3];
    // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2
    mpq_class r1 = a1 * b1 + 2 * a2 * b2 + 3 * a3 * b3 + 6 * a6 * b6;
    mpq_class r2 = a1 * b2 + a2 * b1 + 3 * (a3 * b6 + a6 * b3);
    mpq_class r3 = a1 * b3 + a3 * b1 + 2 * (a2 * b6 + a6 * b2);
    mpq_class r6 = a1 * b6 + a6 * b1 + a2 * b3 + a3 * b2;
    q_[0] = std::move(r1);
    q_[1] = std::move(r2);
    q_[2] = std::move(r3);
    q_[3] = std::move(r6);
    return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) { return *this *= inverse(o); }

bool operator==(const QuadScalar& a, const QuadScalar& b) {
    for (int i = 0; i < 4; ++i)
        if (a.q_[i] != b.q_[i]) return false;
    return true;
}

QuadScalar QuadScalar::conjugate(bool s2, bool s3) const {
    QuadScalar r = *this;
    if (s2) r.q_[1] = -r.q_[1];
    if (s3) r.q_[2] = -r.q_[2];
    if (s2 != s3) r.q_[3] = -r.q_[3];
    return r;
}

std::string QuadScalar::str() const {
    std::string out;
    if (q_[0] != 0) append_term(out, q_[0], nullptr);
    if (q_[1] != 0) append_term(out, q_[1], "r2");
    if (q_[2] != 0) append_term(out, q_[2], "r3");
    if (q_[3] != 0) append_term(out, q_[3], "r6");
    return out.empty() ? "0" : out;
}

QuadScalar add(const QuadScalar& a, const QuadScalar& b) { return a + b; }
QuadScalar mul(const QuadScalar& a, const QuadScalar& b) { return a * b; }

QuadScalar inverse(const QuadScalar& a) {
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    QuadScalar conj = a.conjugate(true, false) * a.conjugate(false, true) * a.conjugate(true, true);
    QuadScalar norm = a * conj;  // rational by Galois invariance
    mpq_class n = norm.q1();
    return conj * QuadScalar(mpq_class(1) / n);
}

std::pair<mpq_class, mpq_class> enclose(const QuadScalar& a, unsigned long bits) {
    mpq_class lo = a.q1(), hi = a.q1();
    const unsigned long rad[3] = {2, 3, 6};
    for (int i = 0; i < 3; ++i) {
        const mpq_class& c = a.component(i + 1);
        if (c == 0) continue;
        // each of the three terms contributes at most 2^-(bits+2)
        mpz_class mag = abs(c.get_num()) / c.get_den() + 1;
        auto [slo, shi] = sqrt_bounds(rad[i], bits + 2 + mpz_sizeinbase(mag.get_mpz_t(), 2));
        if (sgn(c) > 0) {
            lo += c * slo;
            hi += c * shi;
        } else {
            lo += c * shi;
            hi += c * slo;
        }
    }
    return {lo, hi};
}

int sign(const QuadScalar& a) {
    if (a.is_zero()) return 0;
    if (a.is_rational()) return sgn(a.q1());
    for (unsigned long bits = 16;; bits *= 2) {
        auto [lo, hi] = enclose(a, bits);
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
    }
}

std::optional<QuadScalar> sqrt_if_exact(const QuadScalar& a) {
    int s = sign(a);
    if (s < 0) throw Error(ErrorKind::NegativeInput, "sqrt of negative value " + a.str());
    if (s == 0) return QuadScalar();
    // a = alpha + beta*sqrt3 with alpha, beta in Q(sqrt2)
    F2 alpha{a.q1(), a.q2()}, beta{a.q3(), a.q6()};
    std::optional<QuadScalar> cand;
    if (beta.a == 0 && beta.b == 0) {
        if (auto r = f2_sqrt(alpha)) {
            cand = QuadScalar(r->a, r->b, 0, 0);
        } else if (auto r3 = f2_sqrt(F2{alpha.a / 3, alpha.b / 3})) {
            cand = QuadScalar(0, 0, r3->a, r3->b);
        }
    } else {
        F2 a2 = f2_mul(alpha, alpha), b2 = f2_mul(beta, beta);
        F2 norm{a2.a - 3 * b2.a, a2.b - 3 * b2.b};
        if (auto m = f2_sqrt(norm)) {
            for (int sg : {1, -1}) {
                F2 u2{(alpha.a + sg * m->a) / 2, (alpha.b + sg * m->b) / 2};
                if (u2.a == 0 && u2.b == 0) continue;
                auto u = f2_sqrt(u2);
                if (!u) continue;
                F2 v = f2_div(beta, F2{2 * u->a, 2 * u->b});
                QuadScalar b(u->a, u->b, v.a, v.b);
                if (b * b == a) {
                    cand = b;
                    break;
                }
            }
        }
    }
    if (!cand || *cand * *cand != a) return std::nullopt;
    if (sign(*cand) < 0) cand = -*cand;
    return cand;
}

std::optional<mpq_class> rational_root(const mpq_class& a, unsigned k) {
    if (k == 0) return std::nullopt;
    if (sgn(a) < 0 && k % 2 == 0) return std::nullopt;
    mpz_class n = abs(a.get_num()), d = a.get_den();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return std::nullopt;
    mpq_class r(rn, rd);
    r.canonicalize();
    if (sgn(a) < 0) r = -r;
    return r;
}

double approx(const QuadScalar& a) {
    return a.q1().get_d() + a.q2().get_d() * std::sqrt(2.0) + a.q3().get_d() * std::sqrt(3.0) +
           a.q6().get_d() * std::sqrt(6.0);
}

}  // namespace g2forge
