#pragma once

// Test-side oracles and generators. The oracles evaluate forms as alternating
// multilinear maps and use textbook formulas, independent of the library's
// mask arithmetic.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "g2forge/forms.hpp"
#include "g2forge/liealg.hpp"
#include "g2forge/matrix.hpp"
#include "g2forge/scalar.hpp"

namespace oracle {

using g2forge::KForm;
using g2forge::LieAlgebraData;
using g2forge::Mask;
using g2forge::Matrix;
using g2forge::QuadScalar;
using g2forge::Vec;

inline int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

// Determinant by the Leibniz expansion, enumerating only permutations whose
// product has no zero factor.
inline QuadScalar leibniz_det(const std::vector<std::vector<QuadScalar>>& m) {
    std::size_t k = m.size();
    std::vector<int> p(k);
    std::vector<bool> used(k, false);
    QuadScalar total;
    auto rec = [&](auto&& self, std::size_t r, const QuadScalar& prod) -> void {
        if (r == k) {
            total += perm_sign(p) < 0 ? -prod : prod;
            return;
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (used[c] || m[r][c].is_zero()) continue;
            used[c] = true;
            p[r] = static_cast<int>(c);
            self(self, r + 1, prod * m[r][c]);
            used[c] = false;
        }
    };
    rec(rec, 0, QuadScalar(1));
    return total;
}

// a(v_1, ..., v_k) with e^I(v) = det(v_j(i_l)).
inline QuadScalar eval(const KForm& a, const std::vector<Vec>& v) {
    if (static_cast<int>(v.size()) != a.degree()) return QuadScalar();
    if (a.degree() == 0) return a.coeff(Mask(0));
    QuadScalar total;
    for (const auto& [m, c] : a.terms()) {
        auto idx = g2forge::mask_indices(m);
        std::vector<std::vector<QuadScalar>> M(idx.size(), std::vector<QuadScalar>(idx.size()));
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t s = 0; s < idx.size(); ++s) M[r][s] = v[s][idx[r]];
        total += c * leibniz_det(M);
    }
    return total;
}

// Rebuild a form from its values on increasing basis tuples.
template <class F>
KForm from_values(int dim, int degree, F&& value) {
    KForm out(dim, degree);
    for (Mask m : g2forge::masks_of_degree(dim, degree)) {
        std::vector<Vec> v;
        for (int i : g2forge::mask_indices(m)) v.push_back(g2forge::unit_vector(dim, i));
        QuadScalar c = value(v);
        if (!c.is_zero()) out.add_term(m, c);
    }
    return out;
}

inline QuadScalar factorial(int n) {
    QuadScalar f = 1;
    for (int i = 2; i <= n; ++i) f *= QuadScalar(i);
    return f;
}

// a(e_{i_1}, ..., e_{i_k}) for 0-based indices in any order.
inline QuadScalar basis_value(const KForm& a, const std::vector<int>& idx) {
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return QuadScalar();
    Mask m = 0;
    for (int i : idx) m = static_cast<Mask>(m | (1u << i));
    QuadScalar c = a.coeff(m);
    return perm_sign(idx) < 0 ? -c : c;
}

// (a ^ b)(e_I) = 1/(k! l!) sum_sigma sgn(sigma) a(e_sigma(I_1..k)) b(e_sigma(I_k+1..))
inline KForm wedge(const KForm& a, const KForm& b) {
    int k = a.degree(), l = b.degree(), n = a.dim();
    KForm out(n, k + l);
    if (k + l > n) return out;
    QuadScalar norm = g2forge::inverse(factorial(k) * factorial(l));
    for (Mask m : g2forge::masks_of_degree(n, k + l)) {
        auto I = g2forge::mask_indices(m);
        std::vector<int> p(k + l);
        std::iota(p.begin(), p.end(), 0);
        QuadScalar total;
        do {
            std::vector<int> ia, ib;
            for (int i = 0; i < k; ++i) ia.push_back(I[p[i]]);
            for (int i = k; i < k + l; ++i) ib.push_back(I[p[i]]);
            QuadScalar x = basis_value(a, ia);
            if (x.is_zero()) continue;
            QuadScalar y = basis_value(b, ib);
            if (!y.is_zero()) total += QuadScalar(perm_sign(p)) * x * y;
        } while (std::next_permutation(p.begin(), p.end()));
        if (!total.is_zero()) out.add_term(m, total * norm);
    }
    return out;
}

// theta(A) a (v) = -sum_i a(v_1, ..., A v_i, ..., v_k)
inline KForm theta(const Matrix& A, const KForm& a) {
    return from_values(a.dim(), a.degree(), [&](const std::vector<Vec>& v) {
        QuadScalar total;
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto w = v;
            w[i] = A * v[i];
            total -= eval(a, w);
        }
        return total;
    });
}

// Invariant-formula differential: d a(X_0..X_k) = sum_{i<j} (-1)^{i+j} a([X_i,X_j], X_0..^i..^j..)
inline KForm d(const LieAlgebraData& alg, const KForm& a) {
    int k = a.degree();
    return from_values(a.dim(), k + 1, [&](const std::vector<Vec>& X) {
        QuadScalar total;
        for (int i = 0; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                std::vector<Vec> args{alg.bracket(X[i], X[j])};
                for (int m = 0; m <= k; ++m)
                    if (m != i && m != j) args.push_back(X[m]);
                QuadScalar val = eval(a, args);
                if ((i + j) % 2) val = -val;
                total += val;
            }
        return total;
    });
}

// Koszul: <nabla_X Y, Z> = 1/2 (<[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>) in an orthonormal basis.
inline Vec koszul(const LieAlgebraData& alg, int x, int y) {
    int n = alg.dim();
    Vec out(n);
    auto ex = g2forge::unit_vector(n, x), ey = g2forge::unit_vector(n, y);
    for (int z = 0; z < n; ++z) {
        auto ez = g2forge::unit_vector(n, z);
        QuadScalar v = g2forge::dot(alg.bracket(ex, ey), ez) - g2forge::dot(alg.bracket(ey, ez), ex) +
                       g2forge::dot(alg.bracket(ez, ex), ey);
        out[z] = v * QuadScalar::rational(1, 2);
    }
    return out;
}

// Ricci of a left-invariant metric (orthonormal basis), quadratic form
// ric(X,X) = -1/2 sum|[X,e_i]|^2 - 1/2 B(X,X) + 1/4 sum <[e_i,e_j],X>^2 - <[Z,X],X>,
// <Z,X> = tr ad_X; polarised for the off-diagonal entries.
inline Matrix ricci(const LieAlgebraData& alg) {
    int n = alg.dim();
    Vec Z(n);
    for (int a = 0; a < n; ++a) Z[a] = alg.ad(a).trace();
    auto q = [&](const Vec& X) {
        QuadScalar s;
        Matrix adX = alg.ad(X);
        for (int i = 0; i < n; ++i) {
            Vec b = alg.bracket(X, g2forge::unit_vector(n, i));
            s -= g2forge::dot(b, b) * QuadScalar::rational(1, 2);
        }
        s -= (adX * adX).trace() * QuadScalar::rational(1, 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                QuadScalar c = g2forge::dot(alg.bracket_basis(i, j), X);
                s += c * c * QuadScalar::rational(1, 4);
            }
        s -= g2forge::dot(alg.bracket(Z, X), X);
        return s;
    };
    Matrix ric(n, n);
    std::vector<QuadScalar> diag(n);
    for (int a = 0; a < n; ++a) diag[a] = q(g2forge::unit_vector(n, a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) {
                ric(a, a) = diag[a];
                continue;
            }
            Vec s = g2forge::unit_vector(n, a);
            s[b] = 1;
            ric(a, b) = (q(s) - diag[a] - diag[b]) * QuadScalar::rational(1, 2);
        }
    return ric;
}

// (Div T)(e_j) = sum_i (nabla_i T)(e_i, e_j) with the Koszul connection.
inline Vec divergence(const LieAlgebraData& alg, const Matrix& T) {
    int n = alg.dim();
    Vec out(n);
    for (int j = 0; j < n; ++j) {
        QuadScalar s;
        for (int i = 0; i < n; ++i) {
            Vec nii = koszul(alg, i, i), nij = koszul(alg, i, j);
            for (int m = 0; m < n; ++m) {
                s -= nii[m] * T(m, j);
                s -= nij[m] * T(i, m);
            }
        }
        out[j] = s;
    }
    return out;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen); }

    mpq_class rational(long span = 9) {
        mpq_class q(integer(-span, span), integer(1, 6));
        q.canonicalize();
        return q;
    }
    // Random field element; each irrational component present with probability p.
    QuadScalar scalar(double p = 0.5) {
        return QuadScalar(rational(), coin(p) ? rational() : mpq_class(0), coin(p) ? rational() : mpq_class(0),
                          coin(p) ? rational() : mpq_class(0));
    }
    QuadScalar nonzero_scalar(double p = 0.5) {
        for (;;) {
            auto s = scalar(p);
            if (!s.is_zero()) return s;
        }
    }
    KForm form(int dim, int degree, double density = 0.4, double irr = 0.3) {
        KForm f(dim, degree);
        for (Mask m : g2forge::masks_of_degree(dim, degree))
            if (coin(density)) f.add_term(m, scalar(irr));
        return f;
    }
    Matrix matrix(int n, double density = 0.5, double irr = 0.2) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (coin(density)) m(i, j) = scalar(irr);
        return m;
    }
    Matrix rational_skew(int n, double density = 0.5) {
        Matrix k(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(density)) {
                    QuadScalar v(rational(3));
                    k(i, j) = v;
                    k(j, i) = -v;
                }
        return k;
    }
};

// Cayley transform (I - K)(I + K)^{-1}: orthogonal for skew K.
inline Matrix cayley(const Matrix& K) {
    std::size_t n = K.rows();
    Matrix I = Matrix::identity(n);
    return (I - K) * *g2forge::inverse(I + K);
}

inline Vec vec(std::initializer_list<QuadScalar> xs) { return Vec(xs); }

}  // namespace oracle
