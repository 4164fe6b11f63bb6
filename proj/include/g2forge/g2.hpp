#pragma once

#include <optional>
#include <vector>

#include "g2forge/forms.hpp"
#include "g2forge/liealg.hpp"
#include "g2forge/matrix.hpp"
#include "g2forge/riemann.hpp"

namespace g2forge {

// B_ij e^{1..7} = (1/6) i_{e_i}phi ^ i_{e_j}phi ^ phi
Matrix pairing_matrix(const KForm& phi);

struct PositivityResult {
    bool positive = false;
    Matrix B;
    int failing_minor = 0;  // 1-based order of the first non-positive leading minor
    QuadScalar minor_value;
};
// Positivity of orientation*B; orientation = -1 selects the volume form -e^{1..7}.
PositivityResult check_positive(const KForm& phi, int orientation = 1);

// Closed-or-not G2 structure. When the pairing is lambda*Id with lambda = nu^9,
// the induced metric is nu^2*Id; computations then run in the orthonormal frame
// f_i = e_i / nu (frame_alg, frame_phi). In the usual gauge nu = 1.
struct G2Structure {
    LieAlgebraData alg;
    KForm phi;
    Matrix B;
    Matrix metric;
    KForm vol;
    QuadScalar frame_scale = 1;
    int orientation = 1;
    LieAlgebraData frame_alg;
    KForm frame_phi;
    bool closed = false;

    // Rewrites a form given in the orthonormal coframe in the input coframe.
    KForm to_input_coframe(const KForm& a) const;
};

G2Structure build(const LieAlgebraData& alg, const KForm& phi, int orientation = 1);

struct TorsionData {
    KForm tau;
    Matrix tau_matrix;  // tau(X,Y) = <tau_matrix X, Y>
    Matrix tau_sq;
    QuadScalar norm_sq;
    KForm laplacian;  // d tau
    Matrix Q;
    Matrix ric;
    QuadScalar scal;
};

// Skew matrix T of a 2-form with beta(X,Y) = <T X, Y>.
Matrix two_form_matrix(const KForm& beta);
KForm matrix_two_form(const Matrix& T);

TorsionData torsion(const G2Structure& g2);
bool check_theta_identity(const G2Structure& g2);
bool check_theta_identity(const G2Structure& g2, const TorsionData& t);

std::vector<Matrix> derivation_space(const LieAlgebraData& alg);
bool is_derivation(const LieAlgebraData& alg, const Matrix& D);

struct SemiAlgebraicSoliton {
    QuadScalar lambda;
    Matrix D;
    std::size_t solution_dim = 0;  // dimension of the affine solution set in (lambda, D)
};
// Delta phi = lambda phi + theta(D) phi with D a derivation; min-norm D.
std::optional<SemiAlgebraicSoliton> find_semialgebraic_soliton(const G2Structure& g2);
std::optional<SemiAlgebraicSoliton> find_semialgebraic_soliton(const G2Structure& g2, const TorsionData& t);

struct ScaledStructure {
    QuadScalar c;
    std::optional<QuadScalar> cube_root;  // c^(1/3) when in the field
    std::optional<G2Structure> structure;
    std::optional<QuadScalar> metric_scale;     // c^(2/3)
    std::optional<QuadScalar> laplacian_scale;  // c^(1/3)

    const G2Structure& require_concrete() const;
};
ScaledStructure scaling_transport(const G2Structure& g2, const QuadScalar& c);

// h . phi_a == phi_b, after checking h is a bracket isomorphism a -> b.
bool equivalence_check(const LinearMap& h, const G2Structure& a, const G2Structure& b);

// Field root helpers: nu with nu^k = x for k in {3, 9}, searching the radicals.
std::optional<QuadScalar> field_root(const QuadScalar& x, unsigned k);

}  // namespace g2forge
