#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2forge/scalar.hpp"

namespace g2forge {

using Vec = std::vector<QuadScalar>;

// Dense matrix over Q(sqrt2, sqrt3), row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix diag(const Vec& d);
    static Matrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    QuadScalar& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const QuadScalar& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    Matrix transpose() const;
    QuadScalar trace() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;
    bool is_diagonal() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const QuadScalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const QuadScalar& s) { return a *= s; }
    friend Matrix operator*(const QuadScalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<QuadScalar> d_;
};

Matrix operator-(const Matrix& a);
Matrix commutator(const Matrix& a, const Matrix& b);

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {x : m x = 0}.
std::vector<Vec> kernel(const Matrix& m);

struct AffineSolution {
    Vec particular;
    std::vector<Vec> nullspace;
};
// All x with m x = b, or nullopt when inconsistent.
std::optional<AffineSolution> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);
QuadScalar determinant(Matrix m);

// Leading principal minors det(m[0..k, 0..k]) for k = 1..n.
std::vector<QuadScalar> leading_minors(const Matrix& m);

// Gram-Schmidt (no normalisation) w.r.t. the standard inner product.
std::vector<Vec> orthogonalize(const std::vector<Vec>& vs);

QuadScalar dot(const Vec& a, const Vec& b);
Vec axpy(const QuadScalar& a, const Vec& x, const Vec& y);  // a*x + y
Vec scaled(const QuadScalar& a, const Vec& x);
bool is_zero(const Vec& v);
Vec unit_vector(std::size_t n, std::size_t i);

std::string render_vector(const Vec& v);

}  // namespace g2forge
