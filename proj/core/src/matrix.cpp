#include "casimir/matrix.hpp"

#include <cmath>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

ComplexScalar ComplexScalar::inverse() const {
    Scalar n = abs2();
    if (n.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    return {re_ / n, -im_ / n};
}

ComplexScalar& ComplexScalar::operator+=(const ComplexScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ComplexScalar& ComplexScalar::operator-=(const ComplexScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ComplexScalar& ComplexScalar::operator*=(const ComplexScalar& o) {
    if (o.im_.is_zero()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Scalar r = re_ * o.re_ - im_ * o.im_;
    Scalar s = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(s);
    return *this;
}

std::string ComplexScalar::str() const {
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return "(" + im_.str() + ")*i";
    return re_.str() + "+(" + im_.str() + ")*i";
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const std::vector<ComplexScalar>& d) {
    const int n = static_cast<int>(d.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexScalar Matrix::trace() const {
    ComplexScalar t;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_hermitian() const { return is_square() && *this == adjoint(); }

bool Matrix::is_skew_hermitian() const { return is_square() && *this == -adjoint(); }

bool Matrix::is_diagonal() const {
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (r != c && !(*this)(r, c).is_zero()) return false;
    return true;
}

double Matrix::frobenius_norm() const {
    double s = 0;
    for (const auto& x : data_) {
        double a = x.re().to_double();
        double b = x.im().to_double();
        s += a * a + b * b;
    }
    return std::sqrt(s);
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << "[";
        for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).str();
        os << "]\n";
    }
    return os.str();
}

namespace {

void require_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix shape mismatch");
}

}  // namespace

Matrix& Matrix::operator+=(const Matrix& o) {
    require_shape(*this, o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_shape(*this, o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const ComplexScalar& c) {
    for (auto& x : data_) x *= c;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int k = 0; k < a.cols(); ++k) {
            const ComplexScalar& x = a(r, k);
            if (x.is_zero()) continue;
            for (int c = 0; c < b.cols(); ++c) {
                if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        ComplexScalar inv = m(row, col).inverse();
        for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            ComplexScalar f = m(r, col);
            for (int c = col; c < m.cols(); ++c) {
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

Matrix nullspace(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> free;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
    Matrix out(m.cols(), static_cast<int>(free.size()));
    for (std::size_t f = 0; f < free.size(); ++f) {
        const int fc = free[f];
        out(fc, static_cast<int>(f)) = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) out(pivots[k], static_cast<int>(f)) = -r(static_cast<int>(k), fc);
    }
    return out;
}

Matrix column_space(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots = rref(r);
    Matrix out(m.rows(), static_cast<int>(pivots.size()));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < m.rows(); ++i) out(i, static_cast<int>(k)) = m(i, pivots[k]);
    return out;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const int n = m.rows();
    Matrix aug = hstack({m, Matrix::identity(n)});
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
        throw Error(ErrorKind::InvalidArgument, "singular matrix");
    }
    Matrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
    return out;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    int cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != blocks.front().rows()) throw Error(ErrorKind::DimensionMismatch, "hstack row mismatch");
        cols += b.cols();
    }
    Matrix out(blocks.front().rows(), cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) out(r, off + c) = b(r, c);
        off += b.cols();
    }
    return out;
}

Matrix column(const Matrix& m, int c) {
    Matrix out(m.rows(), 1);
    for (int r = 0; r < m.rows(); ++r) out(r, 0) = m(r, c);
    return out;
}

}  // namespace casimir
