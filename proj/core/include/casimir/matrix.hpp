#pragma once

#include <string>
#include <vector>

#include "casimir/scalar.hpp"

namespace casimir {

/// Exact element re + i*im of Q(sqrt 3)(i).
class ComplexScalar {
public:
    ComplexScalar() = default;
    ComplexScalar(Scalar re, Scalar im = Scalar{}) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
    ComplexScalar(long v) : re_(v) {}  // NOLINT
    static ComplexScalar i() { return {Scalar{}, Scalar{1}}; }

    const Scalar& re() const { return re_; }
    const Scalar& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    ComplexScalar conj() const { return {re_, -im_}; }
    Scalar abs2() const { return re_ * re_ + im_ * im_; }
    ComplexScalar inverse() const;
    std::string str() const;

    ComplexScalar operator-() const { return {-re_, -im_}; }
    ComplexScalar& operator+=(const ComplexScalar& o);
    ComplexScalar& operator-=(const ComplexScalar& o);
    ComplexScalar& operator*=(const ComplexScalar& o);
    ComplexScalar& operator/=(const ComplexScalar& o) { return *this *= o.inverse(); }
    friend ComplexScalar operator+(ComplexScalar a, const ComplexScalar& b) { return a += b; }
    friend ComplexScalar operator-(ComplexScalar a, const ComplexScalar& b) { return a -= b; }
    friend ComplexScalar operator*(ComplexScalar a, const ComplexScalar& b) { return a *= b; }
    friend ComplexScalar operator/(ComplexScalar a, const ComplexScalar& b) { return a /= b; }
    friend bool operator==(const ComplexScalar& a, const ComplexScalar& b) = default;

private:
    Scalar re_;
    Scalar im_;
};

/// Dense exact matrix over Q(sqrt 3)(i), row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<ComplexScalar>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    ComplexScalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    const ComplexScalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

    Matrix adjoint() const;
    Matrix transpose() const;
    ComplexScalar trace() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_hermitian() const;
    bool is_skew_hermitian() const;
    bool is_diagonal() const;
    double frobenius_norm() const;
    std::string str() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const ComplexScalar& c);
    Matrix operator-() const;
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const ComplexScalar& c) { return a *= c; }
    friend Matrix operator*(const ComplexScalar& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<ComplexScalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
int rank(Matrix m);
/// Columns form a basis of the kernel.
Matrix nullspace(const Matrix& m);
/// Columns form a basis of the column space.
Matrix column_space(const Matrix& m);
Matrix inverse(const Matrix& m);
/// Stacks matrices side by side.
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix column(const Matrix& m, int c);

}  // namespace casimir
