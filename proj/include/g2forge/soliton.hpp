#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2forge/g2.hpp"

namespace g2forge {

enum class DivergenceCase { DivergenceFree, NonDivergenceFree };

enum class Outcome {
    EliminatedTrivialKernel,
    EliminatedProductObstruction,
    EliminatedExtensionContradiction,
    GaussianOnly,
    Inconclusive,
};

const char* to_string(DivergenceCase c);
const char* to_string(Outcome o);

// Two directions in (ker ric)^perp on which the Rayleigh quotients of Q differ.
struct ProductWitness {
    Vec u, w;
    QuadScalar qu, qw;  // <Q u,u>/<u,u>, <Q w,w>/<w,w>
};

// Case with Div tau^2 != 0 and trivial ker ric: v solves ric v = -1/2 Div tau^2.
struct ExtensionWitness {
    Vec v;
    Vec residual;  // -ric v - 1/2 tau^2 v
    bool parallel = false;
    // when parallel: residual = kappa v; lhs = -kappa, rhs = (scal - lambda)/3
    std::optional<QuadScalar> kappa;
    std::optional<QuadScalar> lhs;
    std::optional<QuadScalar> rhs;
    std::optional<QuadScalar> required_lambda;
};

struct SolitonReport {
    DivergenceCase div_case = DivergenceCase::DivergenceFree;
    Vec div_tau_sq;
    std::vector<Vec> ker_ric;
    Outcome outcome = Outcome::Inconclusive;
    std::optional<QuadScalar> lambda_used;
    bool lambda_free = false;  // verdict holds for every lambda
    std::optional<ProductWitness> product;
    std::optional<ExtensionWitness> extension;
    std::optional<QuadScalar> gaussian_coefficient;  // f = coeff * |x|^2
    std::vector<std::string> notes;
};

// Exit code convention: 0 classified, 2 inconclusive.
int exit_code(const SolitonReport& r);

SolitonReport classify(const G2Structure& g2, std::optional<QuadScalar> lambda = std::nullopt);
SolitonReport classify(const G2Structure& g2, const TorsionData& t, std::optional<QuadScalar> lambda);

// <ric v, .> + 1/2 Div tau^2
Vec key_lemma_residual(const G2Structure& g2, const Vec& v);
Vec key_lemma_residual(const TorsionData& t, const Vec& div_tau_sq, const Vec& v);

// lambda = -((2 + k)/(7 - k)) scal_N, 0 <= k <= 6
QuadScalar gaussian_product_lambda(int k, const QuadScalar& scal);

// diag(-2 ric_N + 2c I, 0_k) with k = 7 - dim N
Matrix product_gaussian_tau_block(const Matrix& ric_N, const QuadScalar& c);

struct ProductConsistency {
    bool consistent = false;
    std::optional<QuadScalar> c;
    std::string reason;
};
// Tests a computed tau^2 against the Gaussian-product prediction with the
// flat factor spanned by the listed frame indices (0-based).
ProductConsistency check_product_gaussian(const Matrix& tau_sq, const Matrix& ric, const std::vector<int>& flat);

}  // namespace g2forge
