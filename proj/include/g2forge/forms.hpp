#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2forge/matrix.hpp"
#include "g2forge/scalar.hpp"

namespace g2forge {

// Index set of an exterior monomial: bit i set <=> e^{i+1} present.
using Mask = std::uint16_t;

int popcount(Mask m);
std::vector<int> mask_indices(Mask m);  // 0-based, increasing
Mask indices_mask(const std::vector<int>& idx);

// Sparse k-form on an n-dimensional space, coefficients never zero.
class KForm {
public:
    KForm() = default;
    KForm(int dim, int degree);

    // e^{i1...ik} with 1-based indices (any order; sign of sorting applied).
    static KForm basis(int dim, const std::vector<int>& one_based);
    static KForm scalar(int dim, const QuadScalar& c);

    int dim() const { return dim_; }
    int degree() const { return deg_; }
    const std::map<Mask, QuadScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    QuadScalar coeff(Mask m) const;
    QuadScalar coeff(const std::vector<int>& one_based) const;
    void add_term(Mask m, const QuadScalar& c);

    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    KForm& operator*=(const QuadScalar& s);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator*(KForm a, const QuadScalar& s) { return a *= s; }
    friend KForm operator*(const QuadScalar& s, KForm a) { return a *= s; }
    KForm operator-() const { return *this * QuadScalar(-1); }
    friend bool operator==(const KForm& a, const KForm& b);
    friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

    std::string str() const;

private:
    int dim_ = 7;
    int deg_ = 0;
    std::map<Mask, QuadScalar> terms_;
};

// Sign of e^a ^ e^b relative to e^{a|b}; 0 when they overlap.
int wedge_sign(Mask a, Mask b);

KForm wedge(const KForm& a, const KForm& b);
KForm contract(const Vec& x, const KForm& a);
// Hodge star for a diagonal gram; orientation is +1 for e^{1..n}.
KForm hodge_star(const KForm& a, const Matrix& gram, int orientation = 1);
KForm hodge_star(const KForm& a);  // identity gram

// Linear endomorphism, column j = image of e_j.
using LinearMap = Matrix;

// h . a = a(h^-1 ., ..., h^-1 .)
KForm pullback_action(const LinearMap& h, const KForm& a);
// theta(A) a = -sum over slots a(.., A., ..)
KForm theta_action(const LinearMap& A, const KForm& a);

// Standard inner product of forms with identity gram.
QuadScalar form_inner(const KForm& a, const KForm& b);

// Dense coordinates over the increasing masks of the given degree.
std::vector<Mask> masks_of_degree(int dim, int degree);
Vec form_coordinates(const KForm& a);

// 1-form e^i (1-based) and vector e_i (1-based).
KForm covector(int dim, int one_based);

// Model G2 form e127 + e347 + e567 + e135 - e146 - e236 - e245.
KForm model_phi();

KForm parse_form(const std::string& text, int dim = 7);

}  // namespace g2forge
