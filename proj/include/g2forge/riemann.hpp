#pragma once

#include <vector>

#include "g2forge/liealg.hpp"
#include "g2forge/matrix.hpp"

namespace g2forge {

// gamma[i][j] = coefficients of nabla_{e_i} e_j in an orthonormal frame.
struct ConnectionTable {
    int dim = 0;
    std::vector<std::vector<Vec>> gamma;

    const Vec& at(int i, int j) const { return gamma[i][j]; }
    // nabla_{e_i} of the constant-coefficient field v
    Vec covariant(int i, const Vec& v) const;
    bool metric_compatible() const;
    bool torsion_free(const LieAlgebraData& alg) const;
};

ConnectionTable levi_civita(const LieAlgebraData& alg);

// R[a][b][c][d] = g(R(e_a, e_b) e_c, e_d), R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]
class CurvatureTensor {
public:
    CurvatureTensor(const LieAlgebraData& alg, const ConnectionTable& conn);
    const QuadScalar& operator()(int a, int b, int c, int d) const { return r_[((a * n_ + b) * n_ + c) * n_ + d]; }
    int dim() const { return n_; }

private:
    int n_;
    std::vector<QuadScalar> r_;
};

Matrix ricci(const LieAlgebraData& alg);
Matrix ricci(const LieAlgebraData& alg, const ConnectionTable& conn);
QuadScalar scal(const LieAlgebraData& alg);

// (Div T)(e_j), through sum_i g(nabla_i(T e_i) - T(nabla_i e_i), .)
Vec divergence(const LieAlgebraData& alg, const Matrix& T);
Vec divergence(const ConnectionTable& conn, const Matrix& T);
// Independent route: -sum_i [T(nabla_i e_i, e_j) + T(e_i, nabla_i e_j)]
Vec divergence_direct(const ConnectionTable& conn, const Matrix& T);

void require_orthonormal(const LieAlgebraData& alg);

}  // namespace g2forge
