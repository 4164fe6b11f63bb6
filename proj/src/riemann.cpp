#include "g2forge/riemann.hpp"

#include "g2forge/errors.hpp"

namespace g2forge {

void require_orthonormal(const LieAlgebraData& alg) {
    if (alg.gram() != Matrix::identity(alg.dim()))
        throw Error(ErrorKind::NonOrthonormalFrame, "only orthonormal frames are supported");
}

Vec ConnectionTable::covariant(int i, const Vec& v) const {
    Vec out(dim);
    for (int m = 0; m < dim; ++m)
        if (!v[m].is_zero()) out = axpy(v[m], gamma[i][m], out);
    return out;
}

bool ConnectionTable::metric_compatible() const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (!(gamma[i][j][k] + gamma[i][k][j]).is_zero()) return false;
    return true;
}

bool ConnectionTable::torsion_free(const LieAlgebraData& alg) const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (gamma[i][j][k] - gamma[j][i][k] != alg.c(i, j, k)) return false;
    return true;
}

ConnectionTable levi_civita(const LieAlgebraData& alg) {
    require_orthonormal(alg);
    int n = alg.dim();
    ConnectionTable t;
    t.dim = n;
    t.gamma.assign(n, std::vector<Vec>(n, Vec(n)));
    QuadScalar half = QuadScalar::rational(1, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                QuadScalar v = alg.c(i, j, k) - alg.c(i, k, j) - alg.c(j, k, i);
                if (!v.is_zero()) t.gamma[i][j][k] = half * v;
            }
    return t;
}

CurvatureTensor::CurvatureTensor(const LieAlgebraData& alg, const ConnectionTable& conn)
    : n_(alg.dim()), r_(static_cast<std::size_t>(n_) * n_ * n_ * n_) {
    int n = n_;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            for (int c = 0; c < n; ++c) {
                Vec v = conn.covariant(a, conn.at(b, c));
                Vec w = conn.covariant(b, conn.at(a, c));
                for (int m = 0; m < n; ++m) v[m] -= w[m];
                for (int m = 0; m < n; ++m)
                    if (!alg.c(a, b, m).is_zero()) v = axpy(-alg.c(a, b, m), conn.at(m, c), v);
                for (int d = 0; d < n; ++d) r_[((a * n + b) * n + c) * n + d] = v[d];
            }
        }
}

Matrix ricci(const LieAlgebraData& alg, const ConnectionTable& conn) {
    int n = alg.dim();
    CurvatureTensor R(alg, conn);
    Matrix ric(n, n);
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            QuadScalar s;
            for (int a = 0; a < n; ++a) s += R(a, b, c, a);
            ric(b, c) = s;
        }
    return ric;
}

Matrix ricci(const LieAlgebraData& alg) { return ricci(alg, levi_civita(alg)); }

QuadScalar scal(const LieAlgebraData& alg) { return ricci(alg).trace(); }

Vec divergence(const ConnectionTable& conn, const Matrix& T) {
    int n = conn.dim;
    if (static_cast<int>(T.rows()) != n || static_cast<int>(T.cols()) != n)
        throw Error(ErrorKind::DimensionMismatch, "tensor size differs from algebra dimension");
    Vec out(n);
    for (int i = 0; i < n; ++i) {
        Vec a_ei = T.column(i);
        Vec first = conn.covariant(i, a_ei);
        Vec second = T * conn.at(i, i);
        for (int j = 0; j < n; ++j) out[j] += first[j] - second[j];
    }
    return out;
}

Vec divergence(const LieAlgebraData& alg, const Matrix& T) { return divergence(levi_civita(alg), T); }

Vec divergence_direct(const ConnectionTable& conn, const Matrix& T) {
    int n = conn.dim;
    Vec out(n);
    for (int j = 0; j < n; ++j) {
        QuadScalar s;
        for (int i = 0; i < n; ++i) {
            // T(nabla_i e_i, e_j) + T(e_i, nabla_i e_j)
            s += dot(conn.at(i, i), T.column(j));
            s += dot(T.row(i), conn.at(i, j));
        }
        out[j] = -s;
    }
    return out;
}

}  // namespace g2forge
