#include <doctest.h>

#include <random>

#include "casimir/error.hpp"
#include "casimir/matrix.hpp"

using namespace casimir;

namespace {

Matrix random_matrix(std::mt19937& rng, int r, int c) {
    std::uniform_int_distribution<int> d(-3, 3);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = ComplexScalar(Scalar(d(rng)), Scalar(0, d(rng)));
    return m;
}

}  // namespace

TEST_CASE("complex scalars") {
    const ComplexScalar i = ComplexScalar::i();
    CHECK(i * i == ComplexScalar(-1));
    const ComplexScalar z(Scalar::parse("1/2"), Scalar::parse("1*s3"));
    CHECK(z * z.inverse() == ComplexScalar(1));
    CHECK(z.abs2() == Scalar::parse("13/4"));
}

TEST_CASE("rank, nullspace and inverse") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_matrix(rng, 4, 2);
        const Matrix b = random_matrix(rng, 2, 4);
        const Matrix m = a * b;  // rank <= 2
        CHECK(rank(m) <= 2);
        const Matrix ker = nullspace(m);
        CHECK(ker.cols() == 4 - rank(m));
        CHECK((m * ker).is_zero());
        CHECK(rank(column_space(m)) == rank(m));
        const Matrix s = random_matrix(rng, 3, 3) + Matrix::identity(3) * ComplexScalar(10);
        CHECK(s * inverse(s) == Matrix::identity(3));
    }
    CHECK_THROWS_AS((void)inverse(Matrix(2, 2)), Error);
}

TEST_CASE("Kronecker product is multiplicative") {
    std::mt19937 rng(8);
    const Matrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    const Matrix c = random_matrix(rng, 3, 3), d = random_matrix(rng, 3, 3);
    CHECK(kron(a, c) * kron(b, d) == kron(a * b, c * d));
    CHECK(commutator(a, a).is_zero());
}

TEST_CASE("adjoint and Hermiticity") {
    std::mt19937 rng(2);
    const Matrix a = random_matrix(rng, 3, 3);
    CHECK((a + a.adjoint()).is_hermitian());
    CHECK((a - a.adjoint()).is_skew_hermitian());
    CHECK((a * a.adjoint()).is_hermitian());
}
